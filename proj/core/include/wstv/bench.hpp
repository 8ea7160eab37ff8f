#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wstv/image.hpp"
#include "wstv/solver.hpp"
#include "wstv/weights.hpp"

namespace wstv {

/// One denoising experiment: images x noise levels x models, each swept over
/// a tau grid under an identical noise realization per (image, sigma).
struct ExperimentPlan {
  struct Entry {
    std::string id;    // seed derivation and table key
    std::string path;  // PGM/PPM file
  };

  std::vector<Entry> images;
  std::vector<double> sigmas;
  std::vector<ModelKind> models;
  std::vector<double> tau_grid;
  std::uint64_t master_seed = 0;
  std::string output_dir;  // empty: keep results in memory only
  bool write_difference_images = false;

  SmoothSpec smooth;        // anisotropic weight parameters (WSTV only)
  int kernel_radius = 1;
  double kernel_sigma = 0.5;
  double rel_tol = 1e-5;
  int max_iter = 100;       // STV/WSTV cap
  int max_iter_tv = 500;    // TV runs longer, its iterations are cheaper
};

struct BenchRow {
  std::string image_id;
  ModelKind model = ModelKind::WSTV;
  double sigma = 0.0;
  double tau = 0.0;  // grid argmax of PSNR, ties toward the smaller value
  double psnr = 0.0;
  double ssim = 0.0;
  int iterations = 0;
  double wall_ms = 0.0;
  std::uint64_t noise_seed = 0;
};

/// 15 logarithmically spaced values in [0.005, 0.5].
std::vector<double> default_tau_grid();

/// Runs the full plan in deterministic plan order. When plan.output_dir is
/// set, writes the best restored image per cell (and difference images when
/// requested) under it. Throws IoError naming any unreadable image.
std::vector<BenchRow> run_bench(const ExperimentPlan& plan);

/// CSV with header image,model,sigma,tau,psnr,ssim,iters,wall_ms.
/// with_wall_ms=false drops the wall-time column (reproducibility checks).
std::string bench_csv(const std::vector<BenchRow>& rows, bool with_wall_ms = true);

/// Markdown tables mirroring the (model x sigma) -> (PSNR, SSIM) layout,
/// one table per image, plus a reproducibility footer (RNG name, seeds,
/// metric conventions).
std::string bench_markdown(const std::vector<BenchRow>& rows, std::uint64_t master_seed);

/// Writes |restored - original| linearly rescaled so the largest difference
/// maps to 1, plus a "<path>.scale.txt" sidecar recording the scale factor.
void emit_difference_image(const Image& original, const Image& restored, const std::string& path);

}  // namespace wstv
