#pragma once

#include <cmath>
#include <vector>

#include "wstv/image.hpp"

namespace wstv {

/// Per-pixel anisotropic weight pair, the diagonal of the weighting applied to
/// gradients before patch aggregation. Both entries lie in (0, 1].
struct WeightField {
  int height = 0;
  int width = 0;
  std::vector<double> w1;  // weight on dx, row-major
  std::vector<double> w2;  // weight on dy

  WeightField() = default;
  WeightField(int h, int w, double fill = 1.0)
      : height(h),
        width(w),
        w1(static_cast<std::size_t>(h) * w, fill),
        w2(static_cast<std::size_t>(h) * w, fill) {}

  static WeightField uniform(int h, int w) { return WeightField(h, w, 1.0); }
  std::size_t pixels() const { return w1.size(); }
};

struct SmoothSpec {
  double kappa = 10.0;      // edge sensitivity; 0 gives uniform weights
  double sigma_hat = 1.0;   // presmoothing std in pixels
  int radius = 3;           // kernel truncation radius, ceil(3*sigma_hat) by default

  static SmoothSpec with_sigma(double kappa, double sigma_hat) {
    return {kappa, sigma_hat, static_cast<int>(std::ceil(3.0 * sigma_hat))};
  }
};

/// Separable convolution with a sampled Gaussian truncated at +-radius and
/// renormalized to unit mass; symmetric (mirror) boundary extension.
/// sigma_hat == 0 or radius == 0 returns the input unchanged.
Image gaussian_smooth(const Image& img, double sigma_hat, int radius);

/// w1 = 1/(1 + kappa*|G * dx f|), w2 = 1/(1 + kappa*|G * dy f|), where the
/// signed directional gradients of the observed image are smoothed before the
/// absolute value is taken. Multichannel images use the channel-mean gradient,
/// producing one field shared by all channels.
WeightField compute_weights(const Image& f, const SmoothSpec& spec);

}  // namespace wstv
