#include "wstv/fixtures.hpp"

#include <cmath>
#include <cstdint>

namespace wstv {

namespace {

constexpr double kPi = 3.14159265358979323846;

// splitmix64 of the pixel index, mapped to [-1,1]; gives reproducible
// high-frequency texture that no smoother can remove.
double hash_texture(std::uint64_t idx) {
  std::uint64_t z = idx + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

double scene_value(double x, double y, std::uint64_t idx) {
  // sky-like background gradient
  double v = 0.55 + 0.25 * y - 0.15 * x;

  // dark figure: elliptical head over a widening body
  const double hx = (x - 0.45), hy = (y - 0.30);
  const bool head = hx * hx / 0.012 + hy * hy / 0.020 < 1.0;
  const bool body = y > 0.38 && y < 0.95 && std::abs(x - 0.45) < 0.10 + 0.25 * (y - 0.38);
  if (head || body) v = 0.12 + 0.05 * y;

  // thin slanted lines
  if (y > 0.55 && std::abs(x - (0.62 + 0.35 * (y - 0.55))) < 0.008) v = 0.08;
  if (y > 0.55 && std::abs(x - (0.70 - 0.20 * (y - 0.55))) < 0.008) v = 0.08;

  // mid-gray block
  if (y > 0.75 && y < 0.92 && x > 0.78 && x < 0.97) v = 0.35;

  // coarse texture band near the bottom
  if (y > 0.80) {
    v += 0.06 * (std::sin(40.0 * kPi * x) * std::sin(34.0 * kPi * y) +
                 0.7 * std::sin(66.0 * kPi * (x + y)));
  }

  // global multiscale detail
  v += 0.034 * std::sin(24.0 * kPi * x) * std::cos(20.0 * kPi * y);
  v += 0.024 * std::sin(57.0 * kPi * x + 2.0 * std::sin(9.0 * kPi * y));
  v += 0.050 * hash_texture(idx);

  return clamp01(v);
}

}  // namespace

Image make_test_image(int size) {
  Image img(size, size, 1);
  const double d = size > 1 ? size - 1.0 : 1.0;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      img.at(0, i, j) = scene_value(j / d, i / d, static_cast<std::uint64_t>(i) * size + j);
    }
  }
  return img;
}

Image make_color_test_image(int size) {
  const Image base = make_test_image(size);
  Image img(size, size, 3);
  const double d = size > 1 ? size - 1.0 : 1.0;
  const std::uint64_t n = base.pixels();
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const double y = i / d, x = j / d;
      const double v = base.at(0, i, j);
      const std::uint64_t idx = static_cast<std::uint64_t>(i) * size + j;
      img.data[idx] = clamp01(v * (0.85 + 0.3 * x));
      img.data[n + idx] = v;
      img.data[2 * n + idx] = clamp01(v * (1.1 - 0.25 * y) + 0.02 * hash_texture(idx + n));
    }
  }
  return img;
}

}  // namespace wstv
