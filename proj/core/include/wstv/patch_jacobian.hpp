#pragma once

#include <cstddef>
#include <vector>

#include "wstv/grad.hpp"
#include "wstv/image.hpp"
#include "wstv/weights.hpp"

namespace wstv {

/// Nonnegative convolution mask on the (2*radius+1)^2 shift grid, unit mass.
/// Shifts are enumerated row-major: g = (gy, gx), gy and gx in -radius..radius.
struct ConvKernel {
  int radius = 0;
  std::vector<double> weights;

  int side() const { return 2 * radius + 1; }
  int count() const { return side() * side(); }  // L

  static ConvKernel delta() { return {0, {1.0}}; }
};

/// Sampled 2-D Gaussian on the shift grid, normalized to sum 1.
/// radius == 0 degenerates to the delta kernel regardless of sigma.
ConvKernel make_gaussian_kernel(int radius, double sigma);

/// Dense element of the dual space: one (L*M) x 2 block per pixel, stored
/// block-major so a pixel's block is contiguous. Row h = m*L + l holds the
/// kernel-weighted translate l of channel m's weighted gradient.
struct PatchJacobianField {
  int pixels = 0;   // N
  int rows = 0;     // L*M
  std::vector<double> data;

  PatchJacobianField() = default;
  PatchJacobianField(int n, int lm)
      : pixels(n), rows(lm), data(2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(lm), 0.0) {}

  double* block(int n) { return data.data() + 2 * static_cast<std::size_t>(n) * rows; }
  const double* block(int n) const { return data.data() + 2 * static_cast<std::size_t>(n) * rows; }

  std::size_t size() const { return data.size(); }
};

double dot(const PatchJacobianField& a, const PatchJacobianField& b);
double norm(const PatchJacobianField& x);

/// The weighted patch-based Jacobian: for pixel i, row (m,l) is
/// sqrt(K[g_l]) * (W grad u_m)(x_i - g_l), with symmetric (mirror) extension
/// of the weighted gradient field at out-of-image source positions.
PatchJacobianField jacobian_apply(const Image& u, const ConvKernel& kernel, const WeightField& weights);

/// Exact adjoint of jacobian_apply: translate rows back (the transpose of the
/// mirrored gather is a mirrored scatter-add), apply the weights, and take the
/// negative backward-difference divergence per channel.
Image jacobian_adjoint(const PatchJacobianField& x, int height, int width, int channels,
                       const ConvKernel& kernel, const WeightField& weights);

/// Power-iteration estimate of the largest eigenvalue of J*J, i.e. ||J||^2.
/// The Rayleigh quotient sequence is nondecreasing in iters.
double operator_norm_sq_estimate(int height, int width, int channels, const ConvKernel& kernel,
                                 const WeightField& weights, int iters);

}  // namespace wstv
