#include "wstv/noise.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace wstv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Top 53 bits of the engine output, mapped to [0,1). Fully specified, unlike
// std::uniform_real_distribution / std::normal_distribution.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class BoxMuller {
 public:
  explicit BoxMuller(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - unit_double(rng_);  // (0,1], keeps log finite
    const double u2 = unit_double(rng_);
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

Image add_gaussian_noise(const Image& img, const NoiseSpec& spec) {
  if (!(spec.sigma >= 0.0)) throw std::invalid_argument("add_gaussian_noise: sigma must be >= 0");
  Image out = img;
  if (spec.sigma == 0.0) return out;
  BoxMuller gen(spec.seed);
  for (double& v : out.data) v += spec.sigma * gen.next();
  return out;
}

std::uint64_t derive_noise_seed(const std::string& image_id, double sigma,
                                std::uint64_t master_seed) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "|%.9g|%llu", sigma, static_cast<unsigned long long>(master_seed));
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&h](const char* s) {
    for (; *s; ++s) {
      h ^= static_cast<std::uint8_t>(*s);
      h *= 1099511628211ULL;
    }
  };
  mix(image_id.c_str());
  mix(buf);
  return h;
}

}  // namespace wstv
