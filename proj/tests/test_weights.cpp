#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wstv/weights.hpp"

using namespace wstv;

TEST_CASE("gaussian_smooth identity cases") {
  std::mt19937_64 rng(31);
  const Image img = oracle::random_image(rng, 9, 11, 1);
  SUBCASE("sigma 0 returns the input") {
    const Image out = gaussian_smooth(img, 0.0, 3);
    CHECK(out.data == img.data);
  }
  SUBCASE("constant image is unchanged for any sigma") {
    const Image c(7, 7, 1, 0.6);
    const Image out = gaussian_smooth(c, 1.7, 5);
    for (double v : out.data) CHECK(v == doctest::Approx(0.6).epsilon(1e-14));
  }
}

TEST_CASE("gaussian_smooth matches the dense 2-D convolution oracle") {
  SUBCASE("impulse image") {
    Image img(9, 9, 1);
    img.at(0, 4, 4) = 1.0;
    const Image fast = gaussian_smooth(img, 1.2, 3);
    const Image ref = oracle::gaussian_conv2d_reference(img, 1.2, 3);
    for (std::size_t k = 0; k < img.size(); ++k) {
      CHECK(std::abs(fast.data[k] - ref.data[k]) <= 1e-12);
    }
  }
  SUBCASE("impulse near the border exercises the mirror extension") {
    Image img(8, 10, 1);
    img.at(0, 0, 1) = 1.0;
    const Image fast = gaussian_smooth(img, 0.8, 2);
    const Image ref = oracle::gaussian_conv2d_reference(img, 0.8, 2);
    for (std::size_t k = 0; k < img.size(); ++k) {
      CHECK(std::abs(fast.data[k] - ref.data[k]) <= 1e-12);
    }
  }
  SUBCASE("random image") {
    std::mt19937_64 rng(33);
    const Image img = oracle::random_image(rng, 12, 7, 1);
    const Image fast = gaussian_smooth(img, 1.5, 4);
    const Image ref = oracle::gaussian_conv2d_reference(img, 1.5, 4);
    for (std::size_t k = 0; k < img.size(); ++k) {
      CHECK(std::abs(fast.data[k] - ref.data[k]) <= 1e-12);
    }
  }
}

TEST_CASE("compute_weights closed-form cases") {
  std::mt19937_64 rng(35);
  SUBCASE("kappa 0 gives uniform weights") {
    const Image f = oracle::random_image(rng, 10, 10, 1);
    const WeightField wf = compute_weights(f, SmoothSpec{0.0, 1.0, 3});
    for (std::size_t p = 0; p < wf.pixels(); ++p) {
      CHECK(wf.w1[p] == 1.0);
      CHECK(wf.w2[p] == 1.0);
    }
  }
  SUBCASE("constant image gives uniform weights for any kappa") {
    const Image f(10, 10, 1, 0.4);
    const WeightField wf = compute_weights(f, SmoothSpec{25.0, 1.0, 3});
    for (std::size_t p = 0; p < wf.pixels(); ++p) {
      CHECK(wf.w1[p] == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(wf.w2[p] == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  SUBCASE("kappa 1 and unit smoothed gradient give weight 0.5") {
    // no smoothing (sigma_hat 0): gradient is used as-is
    Image f(2, 2, 1);
    f.data = {0, 1, 0, 1};  // dx = 1 in the first column
    const WeightField wf = compute_weights(f, SmoothSpec{1.0, 0.0, 0});
    CHECK(wf.w1[0] == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("weights stay in (0,1] and shrink as kappa grows") {
  std::mt19937_64 rng(37);
  const Image f = oracle::random_image(rng, 14, 14, 1);
  const WeightField a = compute_weights(f, SmoothSpec::with_sigma(2.0, 1.0));
  const WeightField b = compute_weights(f, SmoothSpec::with_sigma(8.0, 1.0));
  for (std::size_t p = 0; p < a.pixels(); ++p) {
    CHECK(a.w1[p] > 0.0);
    CHECK(a.w1[p] <= 1.0);
    CHECK(a.w2[p] > 0.0);
    CHECK(a.w2[p] <= 1.0);
    CHECK(b.w1[p] <= a.w1[p]);
    CHECK(b.w2[p] <= a.w2[p]);
  }
}

TEST_CASE("weights are a pure function of the input") {
  std::mt19937_64 rng(39);
  const Image f = oracle::random_image(rng, 9, 9, 3);
  const SmoothSpec spec = SmoothSpec::with_sigma(10.0, 1.0);
  const WeightField a = compute_weights(f, spec);
  const WeightField b = compute_weights(f, spec);
  CHECK(a.w1 == b.w1);
  CHECK(a.w2 == b.w2);
}

TEST_CASE("multichannel weights come from the channel mean") {
  // two channels whose mean is constant: weights must be uniform
  Image f(6, 6, 2);
  std::mt19937_64 rng(41);
  for (std::size_t p = 0; p < f.pixels(); ++p) {
    const double v = oracle::unit(rng);
    f.data[p] = v;
    f.data[f.pixels() + p] = 1.0 - v;
  }
  const WeightField wf = compute_weights(f, SmoothSpec::with_sigma(10.0, 1.0));
  for (std::size_t p = 0; p < wf.pixels(); ++p) {
    CHECK(wf.w1[p] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wf.w2[p] == doctest::Approx(1.0).epsilon(1e-12));
  }
}
