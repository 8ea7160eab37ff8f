#include "wstv/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "wstv/errors.hpp"

namespace wstv {

double psnr(const Image& ref, const Image& test) {
  if (!ref.same_shape(test)) throw ShapeError("psnr: image shapes differ");
  double sum = 0.0;
  for (std::size_t k = 0; k < ref.data.size(); ++k) {
    const double d = ref.data[k] - test.data[k];
    sum += d * d;
  }
  const double mse = sum / static_cast<double>(ref.data.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / mse);
}

namespace {

constexpr int kWindow = 11;
constexpr int kHalf = kWindow / 2;
constexpr double kWindowSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;  // (K1*L)^2, L = 1
constexpr double kC2 = 0.03 * 0.03;

std::vector<double> window_weights() {
  std::vector<double> w(kWindow * kWindow);
  double sum = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    for (int j = 0; j < kWindow; ++j) {
      const double dy = i - kHalf, dx = j - kHalf;
      w[i * kWindow + j] = std::exp(-(dx * dx + dy * dy) / (2.0 * kWindowSigma * kWindowSigma));
      sum += w[i * kWindow + j];
    }
  }
  for (double& v : w) v /= sum;
  return w;
}

double ssim_plane(const double* a, const double* b, int height, int width,
                  const std::vector<double>& w) {
  double total = 0.0;
  std::size_t windows = 0;
  for (int ci = kHalf; ci < height - kHalf; ++ci) {
    for (int cj = kHalf; cj < width - kHalf; ++cj) {
      double ma = 0.0, mb = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        const double* ra = a + (ci + i - kHalf) * width + (cj - kHalf);
        const double* rb = b + (ci + i - kHalf) * width + (cj - kHalf);
        const double* rw = w.data() + i * kWindow;
        for (int j = 0; j < kWindow; ++j) {
          ma += rw[j] * ra[j];
          mb += rw[j] * rb[j];
        }
      }
      double va = 0.0, vb = 0.0, cov = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        const double* ra = a + (ci + i - kHalf) * width + (cj - kHalf);
        const double* rb = b + (ci + i - kHalf) * width + (cj - kHalf);
        const double* rw = w.data() + i * kWindow;
        for (int j = 0; j < kWindow; ++j) {
          const double da = ra[j] - ma, db = rb[j] - mb;
          va += rw[j] * da * da;
          vb += rw[j] * db * db;
          cov += rw[j] * da * db;
        }
      }
      total += ((2.0 * ma * mb + kC1) * (2.0 * cov + kC2)) /
               ((ma * ma + mb * mb + kC1) * (va + vb + kC2));
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

}  // namespace

double ssim(const Image& ref, const Image& test) {
  if (!ref.same_shape(test)) throw ShapeError("ssim: image shapes differ");
  if (ref.height < kWindow || ref.width < kWindow) {
    throw ShapeError("ssim: image " + std::to_string(ref.height) + "x" + std::to_string(ref.width) +
                     " is smaller than the 11x11 window");
  }
  static const std::vector<double> w = window_weights();
  double sum = 0.0;
  for (int c = 0; c < ref.channels; ++c) {
    sum += ssim_plane(ref.plane(c), test.plane(c), ref.height, ref.width, w);
  }
  return sum / ref.channels;
}

MetricReport compute_metrics(const Image& ref, const Image& test) {
  return {psnr(ref, test), ssim(ref, test)};
}

}  // namespace wstv
