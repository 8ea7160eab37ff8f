#include "wstv/patch_jacobian.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirror.hpp"
#include "wstv/errors.hpp"

namespace wstv {

ConvKernel make_gaussian_kernel(int radius, double sigma) {
  if (radius < 0) throw std::invalid_argument("make_gaussian_kernel: radius must be >= 0");
  if (radius == 0) return ConvKernel::delta();
  if (sigma <= 0.0) throw std::invalid_argument("make_gaussian_kernel: sigma must be > 0");
  ConvKernel k;
  k.radius = radius;
  k.weights.resize(static_cast<std::size_t>(k.count()));
  double sum = 0.0;
  std::size_t idx = 0;
  for (int gy = -radius; gy <= radius; ++gy) {
    for (int gx = -radius; gx <= radius; ++gx) {
      k.weights[idx] = std::exp(-(gx * gx + gy * gy) / (2.0 * sigma * sigma));
      sum += k.weights[idx];
      ++idx;
    }
  }
  for (double& w : k.weights) w /= sum;
  return k;
}

double dot(const PatchJacobianField& a, const PatchJacobianField& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.data.size(); ++k) s += a.data[k] * b.data[k];
  return s;
}

double norm(const PatchJacobianField& x) { return std::sqrt(dot(x, x)); }

namespace {

struct ShiftTable {
  std::vector<int> dy, dx;
  std::vector<double> sqk;  // sqrt of kernel weight per shift
};

ShiftTable shift_table(const ConvKernel& kernel) {
  ShiftTable t;
  const int r = kernel.radius;
  t.dy.reserve(kernel.count());
  t.dx.reserve(kernel.count());
  t.sqk.reserve(kernel.count());
  std::size_t idx = 0;
  for (int gy = -r; gy <= r; ++gy) {
    for (int gx = -r; gx <= r; ++gx) {
      t.dy.push_back(gy);
      t.dx.push_back(gx);
      t.sqk.push_back(std::sqrt(kernel.weights[idx++]));
    }
  }
  return t;
}

void check_weights(const WeightField& w, int height, int width, const char* who) {
  if (w.height != height || w.width != width) {
    throw ShapeError(std::string(who) + ": weight field is " + std::to_string(w.height) + "x" +
                     std::to_string(w.width) + ", image is " + std::to_string(height) + "x" +
                     std::to_string(width));
  }
}

// Weighted gradient of one channel: (w1*dx, w2*dy) interleaved.
std::vector<double> weighted_gradient(const GradientField& g, int channel, const WeightField& w) {
  const std::size_t n = g.pixels();
  std::vector<double> wg(2 * n);
  const double* src = g.pair(channel, 0);
  for (std::size_t p = 0; p < n; ++p) {
    wg[2 * p] = w.w1[p] * src[2 * p];
    wg[2 * p + 1] = w.w2[p] * src[2 * p + 1];
  }
  return wg;
}

}  // namespace

PatchJacobianField jacobian_apply(const Image& u, const ConvKernel& kernel,
                                  const WeightField& weights) {
  const int h = u.height, w = u.width, m = u.channels;
  check_weights(weights, h, w, "jacobian_apply");
  const int L = kernel.count();
  const std::size_t n = u.pixels();
  const ShiftTable tab = shift_table(kernel);
  const GradientField g = forward_gradient(u);

  PatchJacobianField out(static_cast<int>(n), L * m);
  for (int c = 0; c < m; ++c) {
    const std::vector<double> wg = weighted_gradient(g, c, weights);
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < w; ++j) {
        double* blk = out.block(static_cast<int>(static_cast<std::size_t>(i) * w + j)) +
                      2 * static_cast<std::size_t>(c) * L;
        for (int l = 0; l < L; ++l) {
          const int si = detail::mirror_index(h, i - tab.dy[l]);
          const int sj = detail::mirror_index(w, j - tab.dx[l]);
          const double* p = &wg[2 * (static_cast<std::size_t>(si) * w + sj)];
          blk[2 * l] = tab.sqk[l] * p[0];
          blk[2 * l + 1] = tab.sqk[l] * p[1];
        }
      }
    }
  }
  return out;
}

Image jacobian_adjoint(const PatchJacobianField& x, int height, int width, int channels,
                       const ConvKernel& kernel, const WeightField& weights) {
  check_weights(weights, height, width, "jacobian_adjoint");
  const int L = kernel.count();
  const std::size_t n = static_cast<std::size_t>(height) * width;
  if (x.pixels != static_cast<int>(n) || x.rows != L * channels) {
    throw ShapeError("jacobian_adjoint: field is " + std::to_string(x.pixels) + "x" +
                     std::to_string(x.rows) + ", expected " + std::to_string(n) + "x" +
                     std::to_string(L * channels));
  }
  const ShiftTable tab = shift_table(kernel);

  Image out(height, width, channels);
  GradientField acc(height, width, 1);
  for (int c = 0; c < channels; ++c) {
    std::fill(acc.data.begin(), acc.data.end(), 0.0);
    // transpose of the mirrored gather: scatter-add each row back to its source
    for (int i = 0; i < height; ++i) {
      for (int j = 0; j < width; ++j) {
        const double* blk = x.block(static_cast<int>(static_cast<std::size_t>(i) * width + j)) +
                            2 * static_cast<std::size_t>(c) * L;
        for (int l = 0; l < L; ++l) {
          const int si = detail::mirror_index(height, i - tab.dy[l]);
          const int sj = detail::mirror_index(width, j - tab.dx[l]);
          double* p = acc.pair(0, static_cast<std::size_t>(si) * width + sj);
          p[0] += tab.sqk[l] * blk[2 * l];
          p[1] += tab.sqk[l] * blk[2 * l + 1];
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      acc.data[2 * p] *= weights.w1[p];
      acc.data[2 * p + 1] *= weights.w2[p];
    }
    const Image d = divergence(acc);
    double* dst = out.plane(c);
    for (std::size_t p = 0; p < n; ++p) dst[p] = -d.data[p];
  }
  return out;
}

double operator_norm_sq_estimate(int height, int width, int channels, const ConvKernel& kernel,
                                 const WeightField& weights, int iters) {
  if (iters < 1) throw std::invalid_argument("operator_norm_sq_estimate: iters must be >= 1");
  // fixed-seed start vector keeps the estimate reproducible
  std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
  Image v(height, width, channels);
  for (double& e : v.data) {
    e = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
  }
  auto normalize = [](Image& img) {
    double s = 0.0;
    for (double e : img.data) s += e * e;
    s = std::sqrt(s);
    if (s > 0.0) {
      for (double& e : img.data) e /= s;
    }
    return s;
  };
  if (normalize(v) == 0.0) return 0.0;
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    const PatchJacobianField jv = jacobian_apply(v, kernel, weights);
    lambda = dot(jv, jv);  // Rayleigh quotient of J*J at the unit vector v
    v = jacobian_adjoint(jv, height, width, channels, kernel, weights);
    if (normalize(v) == 0.0) break;
  }
  return lambda;
}

}  // namespace wstv
