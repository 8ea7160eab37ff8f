#include "wstv/netpbm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "wstv/errors.hpp"

namespace wstv {

namespace {

// Reads one whitespace-delimited header token, skipping '#' comment lines.
std::string next_token(std::istream& in, const char* field) {
  int c = in.get();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    }
    c = in.get();
  }
  if (c == EOF) throw FormatError(std::string("missing header field: ") + field);
  std::string tok;
  while (c != EOF && !std::isspace(c)) {
    tok.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (c != EOF) in.unget();  // the delimiter is not part of the token
  return tok;
}

int parse_positive_int(const std::string& tok, const char* field) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw FormatError(std::string("malformed ") + field + ": \"" + tok + "\"");
  }
  if (pos != tok.size() || v <= 0) {
    throw FormatError(std::string("malformed ") + field + ": \"" + tok + "\"");
  }
  return static_cast<int>(v);
}

}  // namespace

Image load_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);

  const std::string magic = next_token(in, "magic");
  int channels = 0;
  if (magic == "P5") {
    channels = 1;
  } else if (magic == "P6") {
    channels = 3;
  } else {
    throw FormatError("unsupported magic \"" + magic + "\", expected P5 or P6");
  }

  const int width = parse_positive_int(next_token(in, "width"), "width");
  const int height = parse_positive_int(next_token(in, "height"), "height");
  const int maxval = parse_positive_int(next_token(in, "maxval"), "maxval");
  if (maxval != 255) {
    throw FormatError("unsupported maxval " + std::to_string(maxval) + ", only 255");
  }
  // exactly one whitespace byte separates maxval from the payload
  const int sep = in.get();
  if (sep == EOF || !std::isspace(sep)) throw FormatError("missing whitespace after maxval");

  const std::size_t count =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * channels;
  std::vector<std::uint8_t> bytes(count);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(in.gcount()) != count) {
    throw FormatError("truncated payload: expected " + std::to_string(count) + " bytes, got " +
                      std::to_string(in.gcount()));
  }

  Image img(height, width, channels);
  const std::size_t n = img.pixels();
  for (std::size_t p = 0; p < n; ++p) {
    for (int c = 0; c < channels; ++c) {
      img.data[static_cast<std::size_t>(c) * n + p] = bytes[p * channels + c] / 255.0;
    }
  }
  return img;
}

void save_image(const Image& img, const std::string& path) {
  if (img.channels != 1 && img.channels != 3) {
    throw ShapeError("save_image: channels must be 1 or 3, got " + std::to_string(img.channels));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);

  out << (img.channels == 1 ? "P5" : "P6") << "\n"
      << img.width << " " << img.height << "\n255\n";

  const std::size_t n = img.pixels();
  std::vector<std::uint8_t> bytes(n * img.channels);
  for (std::size_t p = 0; p < n; ++p) {
    for (int c = 0; c < img.channels; ++c) {
      double v = img.data[static_cast<std::size_t>(c) * n + p];
      v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
      bytes[p * img.channels + c] = static_cast<std::uint8_t>(std::lround(v * 255.0));
    }
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace wstv
