#pragma once

#include "wstv/image.hpp"

namespace wstv {

/// Deterministic synthetic test scene: smooth background, a dark silhouette
/// with sharp edges, thin line structures, blocky shapes, and fine texture.
/// Statistics are tuned so denoising behaves like on the classic 256x256
/// grayscale test photographs. Bit-identical on every platform.
Image make_test_image(int size = 256);

/// Three-channel variant with channel-correlated structure.
Image make_color_test_image(int size = 256);

}  // namespace wstv
