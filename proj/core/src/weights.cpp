#include "wstv/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mirror.hpp"
#include "wstv/grad.hpp"

namespace wstv {

namespace {

std::vector<double> sampled_gaussian(double sigma, int radius) {
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int t = -radius; t <= radius; ++t) {
    k[t + radius] = std::exp(-(t * t) / (2.0 * sigma * sigma));
    sum += k[t + radius];
  }
  for (double& v : k) v /= sum;
  return k;
}

// One separable pass along rows (horizontal) or columns, mirror extension.
void convolve_axis(const double* in, double* out, int height, int width,
                   const std::vector<double>& k, int radius, bool horizontal) {
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      double acc = 0.0;
      if (horizontal) {
        for (int t = -radius; t <= radius; ++t) {
          acc += k[t + radius] * in[static_cast<std::size_t>(i) * width + detail::mirror_index(width, j + t)];
        }
      } else {
        for (int t = -radius; t <= radius; ++t) {
          acc += k[t + radius] * in[static_cast<std::size_t>(detail::mirror_index(height, i + t)) * width + j];
        }
      }
      out[static_cast<std::size_t>(i) * width + j] = acc;
    }
  }
}

void smooth_plane(const double* in, double* out, int height, int width, double sigma, int radius) {
  const std::vector<double> k = sampled_gaussian(sigma, radius);
  std::vector<double> tmp(static_cast<std::size_t>(height) * width);
  convolve_axis(in, tmp.data(), height, width, k, radius, true);
  convolve_axis(tmp.data(), out, height, width, k, radius, false);
}

}  // namespace

Image gaussian_smooth(const Image& img, double sigma_hat, int radius) {
  if (sigma_hat < 0.0) throw std::invalid_argument("gaussian_smooth: sigma_hat must be >= 0");
  if (radius < 0) throw std::invalid_argument("gaussian_smooth: radius must be >= 0");
  if (sigma_hat == 0.0 || radius == 0) return img;
  Image out(img.height, img.width, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    smooth_plane(img.plane(c), out.plane(c), img.height, img.width, sigma_hat, radius);
  }
  return out;
}

WeightField compute_weights(const Image& f, const SmoothSpec& spec) {
  if (spec.kappa < 0.0) throw std::invalid_argument("compute_weights: kappa must be >= 0");
  const int h = f.height, w = f.width;
  const std::size_t n = f.pixels();

  // channel-mean image drives one shared weight field
  Image mean(h, w, 1);
  for (std::size_t p = 0; p < n; ++p) {
    double s = 0.0;
    for (int c = 0; c < f.channels; ++c) s += f.data[static_cast<std::size_t>(c) * n + p];
    mean.data[p] = s / f.channels;
  }

  const GradientField g = forward_gradient(mean);
  Image gx(h, w, 1), gy(h, w, 1);
  for (std::size_t p = 0; p < n; ++p) {
    gx.data[p] = g.data[2 * p];
    gy.data[p] = g.data[2 * p + 1];
  }
  // smooth the signed gradient, then take the magnitude
  const Image sx = gaussian_smooth(gx, spec.sigma_hat, spec.radius);
  const Image sy = gaussian_smooth(gy, spec.sigma_hat, spec.radius);

  WeightField wf(h, w);
  for (std::size_t p = 0; p < n; ++p) {
    wf.w1[p] = 1.0 / (1.0 + spec.kappa * std::abs(sx.data[p]));
    wf.w2[p] = 1.0 / (1.0 + spec.kappa * std::abs(sy.data[p]));
  }
  return wf;
}

}  // namespace wstv
