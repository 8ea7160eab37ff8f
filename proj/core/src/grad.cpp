#include "wstv/grad.hpp"

namespace wstv {

GradientField forward_gradient(const Image& img) {
  const int h = img.height, w = img.width;
  GradientField g(h, w, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    const double* u = img.plane(c);
    for (int i = 0; i < h; ++i) {
      const double* row = u + static_cast<std::size_t>(i) * w;
      double* out = g.pair(c, static_cast<std::size_t>(i) * w);
      for (int j = 0; j < w; ++j) {
        out[2 * j] = (j < w - 1) ? row[j + 1] - row[j] : 0.0;
        out[2 * j + 1] = (i < h - 1) ? row[j + w] - row[j] : 0.0;
      }
    }
  }
  return g;
}

Image divergence(const GradientField& g) {
  const int h = g.height, w = g.width;
  Image out(h, w, g.channels);
  for (int c = 0; c < g.channels; ++c) {
    double* d = out.plane(c);
    for (int i = 0; i < h; ++i) {
      const double* row = g.pair(c, static_cast<std::size_t>(i) * w);
      const double* above = g.pair(c, static_cast<std::size_t>((i > 0 ? i - 1 : 0)) * w);
      for (int j = 0; j < w; ++j) {
        // dx part: gx(i,j) - gx(i,j-1), dropping the never-produced last column
        double v = 0.0;
        if (j < w - 1) v += row[2 * j];
        if (j > 0) v -= row[2 * (j - 1)];
        // dy part: gy(i,j) - gy(i-1,j), dropping the last row
        if (i < h - 1) v += row[2 * j + 1];
        if (i > 0) v -= above[2 * j + 1];
        d[static_cast<std::size_t>(i) * w + j] = v;
      }
    }
  }
  return out;
}

}  // namespace wstv
