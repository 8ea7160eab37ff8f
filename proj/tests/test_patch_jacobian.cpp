#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wstv/errors.hpp"
#include "wstv/grad.hpp"
#include "wstv/patch_jacobian.hpp"

using namespace wstv;

TEST_CASE("make_gaussian_kernel") {
  SUBCASE("radius 0 is the delta kernel") {
    const ConvKernel k = make_gaussian_kernel(0, 0.5);
    CHECK(k.count() == 1);
    CHECK(k.weights[0] == 1.0);
  }
  SUBCASE("radius 1 has nine symmetric weights summing to 1") {
    const ConvKernel k = make_gaussian_kernel(1, 0.5);
    CHECK(k.count() == 9);
    double sum = 0.0;
    for (double w : k.weights) {
      CHECK(w >= 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    // 90-degree rotation symmetry: all four sides equal, all four corners equal
    CHECK(k.weights[1] == doctest::Approx(k.weights[3]).epsilon(1e-15));
    CHECK(k.weights[1] == doctest::Approx(k.weights[5]).epsilon(1e-15));
    CHECK(k.weights[1] == doctest::Approx(k.weights[7]).epsilon(1e-15));
    CHECK(k.weights[0] == doctest::Approx(k.weights[2]).epsilon(1e-15));
    CHECK(k.weights[0] == doctest::Approx(k.weights[6]).epsilon(1e-15));
    CHECK(k.weights[0] == doctest::Approx(k.weights[8]).epsilon(1e-15));
  }
  SUBCASE("radius 1 sigma 0.5 matches direct normalization") {
    const ConvKernel k = make_gaussian_kernel(1, 0.5);
    // normalize the nine sampled values by hand
    double raw[9], sum = 0.0;
    int idx = 0;
    for (int gy = -1; gy <= 1; ++gy) {
      for (int gx = -1; gx <= 1; ++gx) {
        raw[idx] = std::exp(-(gx * gx + gy * gy) / 0.5);
        sum += raw[idx++];
      }
    }
    for (int i = 0; i < 9; ++i) CHECK(k.weights[i] == doctest::Approx(raw[i] / sum).epsilon(1e-15));
  }
  SUBCASE("invalid arguments throw") {
    CHECK_THROWS_AS(make_gaussian_kernel(-1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_gaussian_kernel(1, 0.0), std::invalid_argument);
  }
}

TEST_CASE("jacobian_apply degenerate cases") {
  std::mt19937_64 rng(51);
  SUBCASE("delta kernel with unit weights reproduces the gradient") {
    const Image u = oracle::random_image(rng, 7, 9, 1);
    const WeightField w = WeightField::uniform(7, 9);
    const PatchJacobianField x = jacobian_apply(u, ConvKernel::delta(), w);
    const GradientField g = forward_gradient(u);
    CHECK(x.rows == 1);
    for (std::size_t k = 0; k < g.data.size(); ++k) CHECK(x.data[k] == g.data[k]);
  }
  SUBCASE("constant image maps to the zero field") {
    const Image u(6, 6, 2, 0.8);
    const ConvKernel k = make_gaussian_kernel(1, 0.7);
    const WeightField w = oracle::random_weights(rng, 6, 6);
    const PatchJacobianField x = jacobian_apply(u, k, w);
    for (double v : x.data) CHECK(v == 0.0);
  }
}

TEST_CASE("jacobian_apply matches the naive loop-over-shifts oracle") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 6; ++trial) {
    const int h = 4 + static_cast<int>(rng() % 6);
    const int w = 4 + static_cast<int>(rng() % 6);
    const int m = trial % 2 ? 3 : 1;
    const int radius = static_cast<int>(rng() % 3);
    const ConvKernel k = radius ? make_gaussian_kernel(radius, oracle::uniform(rng, 0.3, 1.5))
                                : ConvKernel::delta();
    const WeightField wf = oracle::random_weights(rng, h, w);
    const Image u = oracle::random_image(rng, h, w, m);
    const PatchJacobianField fast = jacobian_apply(u, k, wf);
    const PatchJacobianField ref = oracle::jacobian_apply_reference(u, k, wf);
    REQUIRE(fast.data.size() == ref.data.size());
    for (std::size_t i = 0; i < fast.data.size(); ++i) {
      CHECK(std::abs(fast.data[i] - ref.data[i]) <= 1e-14);
    }
  }
}

TEST_CASE("jacobian_adjoint degenerate cases") {
  std::mt19937_64 rng(55);
  SUBCASE("zero field maps to the zero image") {
    const ConvKernel k = make_gaussian_kernel(1, 0.5);
    const WeightField w = oracle::random_weights(rng, 5, 5);
    const PatchJacobianField x(25, 9);
    const Image out = jacobian_adjoint(x, 5, 5, 1, k, w);
    for (double v : out.data) CHECK(v == 0.0);
  }
  SUBCASE("delta kernel with unit weights equals minus divergence") {
    const int h = 6, w = 8;
    PatchJacobianField x = oracle::random_field(rng, h * w, 1);
    const Image out = jacobian_adjoint(x, h, w, 1, ConvKernel::delta(), WeightField::uniform(h, w));
    GradientField g(h, w, 1);
    g.data = x.data;
    const Image d = divergence(g);
    for (std::size_t k = 0; k < out.data.size(); ++k) {
      CHECK(out.data[k] == doctest::Approx(-d.data[k]).epsilon(1e-15));
    }
  }
  SUBCASE("mismatched field shape throws") {
    const PatchJacobianField x(25, 9);
    CHECK_THROWS_AS(jacobian_adjoint(x, 5, 5, 1, ConvKernel::delta(), WeightField::uniform(5, 5)),
                    ShapeError);
  }
}

TEST_CASE("adjoint identity <Ju,X> == <u,J*X> over random instances") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 100; ++trial) {
    const int h = 4 + static_cast<int>(rng() % 10);
    const int w = 4 + static_cast<int>(rng() % 10);
    const int m = (rng() % 2) ? 3 : 1;
    const int radius = static_cast<int>(rng() % 3);
    const ConvKernel k = radius ? make_gaussian_kernel(radius, oracle::uniform(rng, 0.3, 2.0))
                                : ConvKernel::delta();
    const WeightField wf = oracle::random_weights(rng, h, w);
    const Image u = oracle::random_image(rng, h, w, m, -1.0, 1.0);
    const PatchJacobianField x = oracle::random_field(rng, h * w, k.count() * m);

    const double lhs = dot(jacobian_apply(u, k, wf), x);
    const Image adj = jacobian_adjoint(x, h, w, m, k, wf);
    double rhs = 0.0, un = 0.0;
    for (std::size_t i = 0; i < u.data.size(); ++i) {
      rhs += u.data[i] * adj.data[i];
      un += u.data[i] * u.data[i];
    }
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::sqrt(un) * norm(x));
  }
}

TEST_CASE("jacobian_apply is linear") {
  std::mt19937_64 rng(59);
  const int h = 8, w = 6;
  const ConvKernel k = make_gaussian_kernel(1, 0.5);
  const WeightField wf = oracle::random_weights(rng, h, w);
  const Image u = oracle::random_image(rng, h, w, 1);
  const Image v = oracle::random_image(rng, h, w, 1);
  const double a = 1.7, b = -0.4;
  Image combo(h, w, 1);
  for (std::size_t i = 0; i < combo.data.size(); ++i) combo.data[i] = a * u.data[i] + b * v.data[i];
  const PatchJacobianField xu = jacobian_apply(u, k, wf);
  const PatchJacobianField xv = jacobian_apply(v, k, wf);
  const PatchJacobianField xc = jacobian_apply(combo, k, wf);
  for (std::size_t i = 0; i < xc.data.size(); ++i) {
    CHECK(xc.data[i] == doctest::Approx(a * xu.data[i] + b * xv.data[i]).epsilon(1e-12));
  }
}

TEST_CASE("delta kernel row norms reproduce the TV value") {
  std::mt19937_64 rng(61);
  const int h = 9, w = 9;
  const Image u = oracle::random_image(rng, h, w, 1);
  const PatchJacobianField x = jacobian_apply(u, ConvKernel::delta(), WeightField::uniform(h, w));
  double tv_from_blocks = 0.0;
  for (int n = 0; n < x.pixels; ++n) {
    const double* blk = x.block(n);
    tv_from_blocks += std::hypot(blk[0], blk[1]);
  }
  const GradientField g = forward_gradient(u);
  double tv = 0.0;
  for (std::size_t p = 0; p < g.pixels(); ++p) {
    tv += std::hypot(g.data[2 * p], g.data[2 * p + 1]);
  }
  CHECK(tv_from_blocks == doctest::Approx(tv).epsilon(1e-15));
}

TEST_CASE("operator norm estimates") {
  SUBCASE("pure gradient on a 1x16 row stays at or below 8") {
    const double est =
        operator_norm_sq_estimate(1, 16, 1, ConvKernel::delta(), WeightField::uniform(1, 16), 100);
    CHECK(est <= 8.0 + 1e-6);
  }
  SUBCASE("estimate is nondecreasing in iters") {
    const ConvKernel k = make_gaussian_kernel(1, 0.8);
    const WeightField w = WeightField::uniform(16, 16);
    double prev = 0.0;
    for (int iters : {1, 2, 4, 8, 16, 32}) {
      const double est = operator_norm_sq_estimate(16, 16, 1, k, w, iters);
      CHECK(est >= prev - 1e-12);
      prev = est;
    }
  }
  SUBCASE("any mass-1 kernel with weights <= 1 stays below 8*sqrt(2)") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 10; ++trial) {
      const int radius = 1 + static_cast<int>(rng() % 2);
      const ConvKernel k = make_gaussian_kernel(radius, oracle::uniform(rng, 0.3, 4.0));
      const WeightField w = oracle::random_weights(rng, 16, 16);
      const double est = operator_norm_sq_estimate(16, 16, 1, k, w, 50);
      CHECK(est <= 8.0 * std::sqrt(2.0) + 1e-6);
    }
  }
  SUBCASE("estimate matches the dense eigendecomposition on 6x6") {
    std::mt19937_64 rng(65);
    const ConvKernel k = make_gaussian_kernel(1, 0.6);
    const WeightField w = oracle::random_weights(rng, 6, 6);
    const Eigen::MatrixXd J = oracle::dense_jacobian_matrix(6, 6, 1, k, w);
    const Eigen::MatrixXd gram = J.transpose() * J;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    const double largest = eig.eigenvalues().maxCoeff();
    const double est = operator_norm_sq_estimate(6, 6, 1, k, w, 3000);
    CHECK(est == doctest::Approx(largest).epsilon(1e-6));
  }
}
