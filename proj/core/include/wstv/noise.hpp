#pragma once

#include <cstdint>
#include <string>

#include "wstv/image.hpp"

namespace wstv {

struct NoiseSpec {
  double sigma = 0.0;  // std deviation in intensity units
  std::uint64_t seed = 0;
};

/// Name of the generator, recorded in bench output so runs can be reproduced.
inline constexpr const char* kNoiseRngName = "mt19937_64+box-muller";

/// Adds i.i.d. N(0, sigma^2) noise to every element. The generator is fully
/// specified (mt19937_64 bits mapped to doubles, basic Box-Muller transform),
/// so identical (img, spec) give bit-identical output on any platform.
/// The result is intentionally not clamped to [0,1]; the solver's box
/// projection owns that constraint.
Image add_gaussian_noise(const Image& img, const NoiseSpec& spec);

/// Deterministic seed for a bench cell so every model sees the same noise
/// realization: FNV-1a over "image_id|sigma|master_seed".
std::uint64_t derive_noise_seed(const std::string& image_id, double sigma, std::uint64_t master_seed);

}  // namespace wstv
