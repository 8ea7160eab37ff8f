#include <benchmark/benchmark.h>

#include "wstv/fixtures.hpp"
#include "wstv/grad.hpp"
#include "wstv/metrics.hpp"
#include "wstv/noise.hpp"
#include "wstv/patch_jacobian.hpp"
#include "wstv/solver.hpp"
#include "wstv/spectral.hpp"
#include "wstv/weights.hpp"

namespace {

wstv::Image bench_image(int n) { return wstv::make_test_image(n); }

void BM_forward_gradient(benchmark::State& state) {
  const wstv::Image u = bench_image(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto g = wstv::forward_gradient(u);
    benchmark::DoNotOptimize(g.data.data());
  }
  state.SetItemsProcessed(state.iterations() * u.pixels());
}
BENCHMARK(BM_forward_gradient)->Arg(128)->Arg(256);

void BM_jacobian_apply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wstv::Image u = bench_image(n);
  const wstv::ConvKernel k = wstv::make_gaussian_kernel(1, 0.5);
  const wstv::WeightField w = wstv::WeightField::uniform(n, n);
  for (auto _ : state) {
    auto x = wstv::jacobian_apply(u, k, w);
    benchmark::DoNotOptimize(x.data.data());
  }
  state.SetItemsProcessed(state.iterations() * u.pixels());
}
BENCHMARK(BM_jacobian_apply)->Arg(128)->Arg(256);

void BM_jacobian_adjoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wstv::Image u = bench_image(n);
  const wstv::ConvKernel k = wstv::make_gaussian_kernel(1, 0.5);
  const wstv::WeightField w = wstv::WeightField::uniform(n, n);
  const wstv::PatchJacobianField x = wstv::jacobian_apply(u, k, w);
  for (auto _ : state) {
    auto img = wstv::jacobian_adjoint(x, n, n, 1, k, w);
    benchmark::DoNotOptimize(img.data.data());
  }
  state.SetItemsProcessed(state.iterations() * u.pixels());
}
BENCHMARK(BM_jacobian_adjoint)->Arg(128)->Arg(256);

void BM_project_binf_sinf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wstv::Image u = bench_image(n);
  const wstv::ConvKernel k = wstv::make_gaussian_kernel(1, 0.5);
  const wstv::WeightField w = wstv::WeightField::uniform(n, n);
  wstv::PatchJacobianField x = wstv::jacobian_apply(u, k, w);
  for (double& v : x.data) v *= 20.0;  // most blocks infeasible
  for (auto _ : state) {
    auto p = wstv::project_binf_sinf(x);
    benchmark::DoNotOptimize(p.data.data());
  }
  state.SetItemsProcessed(state.iterations() * u.pixels());
}
BENCHMARK(BM_project_binf_sinf)->Arg(128)->Arg(256);

void BM_ssim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wstv::Image a = bench_image(n);
  const wstv::Image b = wstv::add_gaussian_noise(a, {0.05, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wstv::ssim(a, b));
  }
}
BENCHMARK(BM_ssim)->Arg(256);

void BM_fgp_iterations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wstv::Image f = wstv::add_gaussian_noise(bench_image(n), {0.1, 1});
  const wstv::ConvKernel k = wstv::make_gaussian_kernel(1, 0.5);
  const wstv::WeightField w = wstv::compute_weights(f, wstv::SmoothSpec::with_sigma(10.0, 1.0));
  wstv::SolverConfig cfg;
  cfg.tau = 0.07;
  cfg.max_iter = 10;
  cfg.rel_tol = 0.0;
  for (auto _ : state) {
    auto res = wstv::fgp_denoise(f, cfg, k, w);
    benchmark::DoNotOptimize(res.image.data.data());
  }
  state.SetItemsProcessed(state.iterations() * cfg.max_iter);
}
BENCHMARK(BM_fgp_iterations)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
