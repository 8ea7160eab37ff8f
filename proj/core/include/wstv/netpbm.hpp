#pragma once

#include <string>

#include "wstv/image.hpp"

namespace wstv {

/// Reads a binary PGM (P5) or PPM (P6) file with maxval 255. Intensities are
/// mapped to [0,1] by division by 255; P5 yields 1 channel, P6 yields 3.
/// Throws FormatError naming the offending header field, IoError on read failure.
Image load_image(const std::string& path);

/// Writes 1-channel images as binary PGM, 3-channel as binary PPM. Values are
/// clamped to [0,1] and quantized with round-half-away-from-zero to 8 bits.
void save_image(const Image& img, const std::string& path);

}  // namespace wstv
