#pragma once

#include <cstddef>
#include <vector>

namespace wstv {

/// Multichannel intensity image. Channels are stored as consecutive planes,
/// each plane row-major, nominal intensity range [0,1].
struct Image {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> data;

  Image() = default;
  Image(int h, int w, int m = 1, double fill = 0.0)
      : height(h),
        width(w),
        channels(m),
        data(static_cast<std::size_t>(h) * static_cast<std::size_t>(w) * static_cast<std::size_t>(m),
             fill) {}

  std::size_t pixels() const {
    return static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  }
  std::size_t size() const { return data.size(); }

  double& at(int c, int i, int j) { return data[(static_cast<std::size_t>(c) * height + i) * width + j]; }
  double at(int c, int i, int j) const {
    return data[(static_cast<std::size_t>(c) * height + i) * width + j];
  }

  /// Plane pointer for channel c.
  double* plane(int c) { return data.data() + static_cast<std::size_t>(c) * pixels(); }
  const double* plane(int c) const { return data.data() + static_cast<std::size_t>(c) * pixels(); }

  bool same_shape(const Image& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }
};

}  // namespace wstv
