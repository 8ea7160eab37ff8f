#pragma once

#include <cstddef>
#include <vector>

#include "wstv/image.hpp"

namespace wstv {

/// Per-pixel forward-difference gradient, one (dx, dy) pair per pixel per
/// channel. The two components are interleaved so a pixel's pair is contiguous.
/// By construction dx vanishes on the last column and dy on the last row.
struct GradientField {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> data;  // [(c*H + i)*W + j]*2 + {0:dx, 1:dy}

  GradientField() = default;
  GradientField(int h, int w, int m = 1)
      : height(h),
        width(w),
        channels(m),
        data(2 * static_cast<std::size_t>(h) * static_cast<std::size_t>(w) * static_cast<std::size_t>(m),
             0.0) {}

  std::size_t pixels() const {
    return static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  }
  double& dx(int c, int i, int j) { return data[2 * ((static_cast<std::size_t>(c) * height + i) * width + j)]; }
  double& dy(int c, int i, int j) {
    return data[2 * ((static_cast<std::size_t>(c) * height + i) * width + j) + 1];
  }
  double dx(int c, int i, int j) const {
    return data[2 * ((static_cast<std::size_t>(c) * height + i) * width + j)];
  }
  double dy(int c, int i, int j) const {
    return data[2 * ((static_cast<std::size_t>(c) * height + i) * width + j) + 1];
  }
  /// Pointer to the (dx,dy) pair of pixel (i,j) in channel c.
  double* pair(int c, std::size_t n) { return data.data() + 2 * (static_cast<std::size_t>(c) * pixels() + n); }
  const double* pair(int c, std::size_t n) const {
    return data.data() + 2 * (static_cast<std::size_t>(c) * pixels() + n);
  }
};

GradientField forward_gradient(const Image& img);

/// Backward-difference divergence, the exact negative adjoint of
/// forward_gradient: <grad u, g> == -<u, div g> for every u, g. The stored
/// last-column dx / last-row dy entries are never read.
Image divergence(const GradientField& g);

}  // namespace wstv
