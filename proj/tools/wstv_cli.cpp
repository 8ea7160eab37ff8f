// Command-line front end: denoise, add-noise, metrics, bench, diff-image.
#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wstv/bench.hpp"
#include "wstv/errors.hpp"
#include "wstv/fixtures.hpp"
#include "wstv/metrics.hpp"
#include "wstv/netpbm.hpp"
#include "wstv/noise.hpp"
#include "wstv/patch_jacobian.hpp"
#include "wstv/solver.hpp"
#include "wstv/spectral.hpp"
#include "wstv/weights.hpp"

namespace {

struct ModelFlags {
  std::string model = "wstv";
  double kappa = 10.0;
  double sigma_smooth = 1.0;
  int smooth_radius = -1;  // -1: ceil(3*sigma_smooth)
  int kernel_radius = 1;
  double kernel_sigma = 0.5;
};

void add_model_flags(CLI::App* cmd, ModelFlags& mf) {
  cmd->add_option("--model", mf.model, "Regularizer: tv, stv or wstv")
      ->check(CLI::IsMember({"tv", "stv", "wstv"}));
  cmd->add_option("--kappa", mf.kappa, "Edge sensitivity of the anisotropic weights");
  cmd->add_option("--sigma-smooth", mf.sigma_smooth, "Gaussian presmoothing std for the weights");
  cmd->add_option("--smooth-radius", mf.smooth_radius,
                  "Weight presmoothing kernel radius (default ceil(3*sigma))");
  cmd->add_option("--kernel-radius", mf.kernel_radius, "Patch kernel radius L_K");
  cmd->add_option("--kernel-sigma", mf.kernel_sigma, "Patch kernel Gaussian sigma");
}

wstv::ModelKind parse_model(const std::string& name) {
  if (name == "tv") return wstv::ModelKind::TV;
  if (name == "stv") return wstv::ModelKind::STV;
  return wstv::ModelKind::WSTV;
}

wstv::SmoothSpec smooth_spec(const ModelFlags& mf) {
  wstv::SmoothSpec s;
  s.kappa = mf.kappa;
  s.sigma_hat = mf.sigma_smooth;
  s.radius = mf.smooth_radius >= 0 ? mf.smooth_radius
                                   : static_cast<int>(std::ceil(3.0 * mf.sigma_smooth));
  return s;
}

int run_denoise(const ModelFlags& mf, const std::string& in_path, const std::string& out_path,
                const std::string& ref_path, const std::string& trace_path, double tau,
                int max_iter, double tol, bool estimated_lipschitz) {
  const wstv::Image noisy = wstv::load_image(in_path);
  const wstv::ModelKind kind = parse_model(mf.model);

  const wstv::ConvKernel kernel = (kind == wstv::ModelKind::TV)
                                      ? wstv::ConvKernel::delta()
                                      : wstv::make_gaussian_kernel(mf.kernel_radius, mf.kernel_sigma);
  const wstv::WeightField weights =
      (kind == wstv::ModelKind::WSTV)
          ? wstv::compute_weights(noisy, smooth_spec(mf))
          : wstv::WeightField::uniform(noisy.height, noisy.width);

  wstv::SolverConfig cfg;
  cfg.tau = tau;
  cfg.max_iter = max_iter > 0 ? max_iter : (kind == wstv::ModelKind::TV ? 500 : 100);
  cfg.rel_tol = tol;
  cfg.record_trace = !trace_path.empty();
  cfg.use_estimated_lipschitz = estimated_lipschitz;

  const wstv::DenoiseResult res = wstv::fgp_denoise(noisy, cfg, kernel, weights);
  wstv::save_image(res.image, out_path);

  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw wstv::IoError("cannot write trace: " + trace_path);
    out << res.trace.to_csv();
  }
  std::printf("model=%s tau=%g iterations=%d\n", wstv::model_name(kind), tau,
              res.trace.iterations);
  if (!ref_path.empty()) {
    const wstv::Image ref = wstv::load_image(ref_path);
    const wstv::MetricReport m = wstv::compute_metrics(ref, res.image);
    std::printf("psnr=%.4f ssim=%.4f\n", m.psnr, m.ssim);
  }
  return 0;
}

std::vector<double> parse_grid(const std::string& spec) {
  if (spec.empty()) return wstv::default_tau_grid();
  std::vector<double> grid;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    grid.push_back(std::stod(spec.substr(pos, next - pos)));
    pos = next + 1;
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted structure-tensor total-variation image denoiser"};
  app.require_subcommand(1);

  // denoise
  auto* denoise = app.add_subcommand("denoise", "Denoise one image with the FGP solver");
  ModelFlags dn_mf;
  std::string dn_in, dn_out, dn_ref, dn_trace;
  double dn_tau = 0.0, dn_tol = 1e-5;
  int dn_max_iter = 0;
  bool dn_est_lip = false;
  add_model_flags(denoise, dn_mf);
  denoise->add_option("--tau", dn_tau, "Regularization weight")->required();
  denoise->add_option("--in", dn_in, "Input image (PGM/PPM)")->required();
  denoise->add_option("--out", dn_out, "Output image path")->required();
  denoise->add_option("--ref", dn_ref, "Reference image for PSNR/SSIM");
  denoise->add_option("--trace", dn_trace, "Write per-iteration trace CSV here");
  denoise->add_option("--max-iter", dn_max_iter, "Iteration cap (default 100, tv 500)");
  denoise->add_option("--tol", dn_tol, "Relative-change stopping tolerance");
  denoise->add_flag("--estimated-lipschitz", dn_est_lip,
                    "Use the power-iteration Lipschitz estimate for the step size");

  // add-noise
  auto* addn = app.add_subcommand("add-noise", "Add seeded Gaussian noise");
  std::string an_in, an_out;
  double an_sigma = 0.0;
  std::uint64_t an_seed = 0;
  addn->add_option("--in", an_in)->required();
  addn->add_option("--out", an_out)->required();
  addn->add_option("--sigma", an_sigma, "Noise standard deviation")->required();
  addn->add_option("--seed", an_seed, "RNG seed");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "PSNR/SSIM of a test image against a reference");
  std::string mt_ref, mt_in;
  metrics->add_option("--ref", mt_ref)->required();
  metrics->add_option("--in", mt_in)->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Noise/denoise/tau-sweep experiment table");
  ModelFlags bn_mf;
  std::vector<std::string> bn_images;
  std::string bn_models = "tv,stv,wstv", bn_sigmas = "0.01,0.05,0.1,0.15";
  std::string bn_taus, bn_out_dir = "bench_out", bn_table = "csv";
  std::uint64_t bn_seed = 0;
  int bn_max_iter = 100;
  double bn_tol = 1e-5;
  bool bn_diff = false;
  add_model_flags(bench, bn_mf);
  bench->add_option("--in", bn_images, "Input images (repeatable)")->required();
  bench->add_option("--models", bn_models, "Comma-separated subset of tv,stv,wstv");
  bench->add_option("--sigma", bn_sigmas, "Comma-separated noise levels");
  bench->add_option("--tau-grid", bn_taus, "Comma-separated tau grid (default 15 log-spaced)");
  bench->add_option("--seed", bn_seed, "Master seed");
  bench->add_option("--out", bn_out_dir, "Output directory");
  bench->add_option("--table", bn_table, "Table format")->check(CLI::IsMember({"csv", "md"}));
  bench->add_option("--max-iter", bn_max_iter, "Iteration cap for STV/WSTV");
  bench->add_option("--tol", bn_tol, "Stopping tolerance");
  bench->add_flag("--diff-images", bn_diff, "Also write |restored-original| images");

  // diff-image
  auto* diff = app.add_subcommand("diff-image", "Rescaled absolute difference of two images");
  std::string df_ref, df_in, df_out;
  diff->add_option("--ref", df_ref, "Original image")->required();
  diff->add_option("--in", df_in, "Restored image")->required();
  diff->add_option("--out", df_out, "Output difference image")->required();

  // make-fixture
  auto* fixture = app.add_subcommand("make-fixture", "Write the procedural test scene");
  std::string fx_out;
  int fx_size = 256;
  bool fx_color = false;
  fixture->add_option("--out", fx_out, "Output image path")->required();
  fixture->add_option("--size", fx_size, "Side length in pixels");
  fixture->add_flag("--color", fx_color, "Three-channel variant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  try {
    if (*denoise) {
      return run_denoise(dn_mf, dn_in, dn_out, dn_ref, dn_trace, dn_tau, dn_max_iter, dn_tol,
                         dn_est_lip);
    }
    if (*addn) {
      const wstv::Image img = wstv::load_image(an_in);
      wstv::save_image(wstv::add_gaussian_noise(img, {an_sigma, an_seed}), an_out);
      std::printf("rng=%s seed=%llu sigma=%g\n", wstv::kNoiseRngName,
                  static_cast<unsigned long long>(an_seed), an_sigma);
      return 0;
    }
    if (*metrics) {
      const wstv::Image ref = wstv::load_image(mt_ref);
      const wstv::Image img = wstv::load_image(mt_in);
      const wstv::MetricReport m = wstv::compute_metrics(ref, img);
      if (std::isinf(m.psnr)) {
        std::printf("psnr=inf ssim=%.6f\n", m.ssim);
      } else {
        std::printf("psnr=%.6f ssim=%.6f\n", m.psnr, m.ssim);
      }
      return 0;
    }
    if (*diff) {
      const wstv::Image ref = wstv::load_image(df_ref);
      const wstv::Image img = wstv::load_image(df_in);
      wstv::emit_difference_image(ref, img, df_out);
      return 0;
    }
    if (*fixture) {
      wstv::save_image(fx_color ? wstv::make_color_test_image(fx_size)
                                : wstv::make_test_image(fx_size),
                       fx_out);
      return 0;
    }
    if (*bench) {
      wstv::ExperimentPlan plan;
      for (const std::string& path : bn_images) {
        plan.images.push_back({std::filesystem::path(path).stem().string(), path});
      }
      for (double s : parse_grid(bn_sigmas)) plan.sigmas.push_back(s);
      std::size_t pos = 0;
      while (pos < bn_models.size()) {
        std::size_t next = bn_models.find(',', pos);
        if (next == std::string::npos) next = bn_models.size();
        plan.models.push_back(parse_model(bn_models.substr(pos, next - pos)));
        pos = next + 1;
      }
      plan.tau_grid = parse_grid(bn_taus);
      plan.master_seed = bn_seed;
      plan.output_dir = bn_out_dir;
      plan.write_difference_images = bn_diff;
      plan.smooth = smooth_spec(bn_mf);
      plan.kernel_radius = bn_mf.kernel_radius;
      plan.kernel_sigma = bn_mf.kernel_sigma;
      plan.rel_tol = bn_tol;
      plan.max_iter = bn_max_iter;

      const std::vector<wstv::BenchRow> rows = wstv::run_bench(plan);
      std::filesystem::create_directories(plan.output_dir);
      {
        std::ofstream csv(plan.output_dir + "/bench.csv");
        csv << wstv::bench_csv(rows);
      }
      {
        std::ofstream md(plan.output_dir + "/bench.md");
        md << wstv::bench_markdown(rows, plan.master_seed);
      }
      std::cout << (bn_table == "md" ? wstv::bench_markdown(rows, plan.master_seed)
                                     : wstv::bench_csv(rows));
      return 0;
    }
  } catch (const wstv::ShapeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
