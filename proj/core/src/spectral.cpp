#include "wstv/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wstv {

namespace {

struct Gram {
  double a = 0.0, b = 0.0, c = 0.0;  // [[a,b],[b,c]] = block^T block
};

inline Gram gram_of(const double* block, int nrows) {
  Gram g;
  for (int r = 0; r < nrows; ++r) {
    const double x = block[2 * r], y = block[2 * r + 1];
    g.a += x * x;
    g.b += x * y;
    g.c += y * y;
  }
  return g;
}

inline void gram_eigenvalues(const Gram& g, double& lp, double& lm) {
  const double tr = g.a + g.c;
  const double diff = g.a - g.c;
  const double disc = std::sqrt(diff * diff + 4.0 * g.b * g.b);
  lp = 0.5 * (tr + disc);
  lm = 0.5 * (tr - disc);
  if (lp < 0.0) lp = 0.0;
  if (lm < 0.0) lm = 0.0;
}

}  // namespace

SingularPair singular_pair(const double* block, int nrows) {
  if (nrows == 1) {
    // a single row is rank one: its norm and an exact zero, with no
    // cancellation through the Gram matrix
    return {std::hypot(block[0], block[1]), 0.0};
  }
  double lp, lm;
  gram_eigenvalues(gram_of(block, nrows), lp, lm);
  return {std::sqrt(lp), std::sqrt(lm)};
}

double wstv_value(const Image& u, const ConvKernel& kernel, const WeightField& weights, int p) {
  if (p != 1) {
    throw std::invalid_argument("wstv_value: unsupported Schatten order p=" + std::to_string(p) +
                                ", only p=1");
  }
  const PatchJacobianField x = jacobian_apply(u, kernel, weights);
  double sum = 0.0;
  for (int n = 0; n < x.pixels; ++n) {
    const SingularPair s = singular_pair(x.block(n), x.rows);
    sum += s.sigma_plus + s.sigma_minus;
  }
  return sum;
}

void project_binf_sinf_inplace(PatchJacobianField& phi) {
  const int nrows = phi.rows;
  for (int n = 0; n < phi.pixels; ++n) {
    double* blk = phi.block(n);
    const Gram g = gram_of(blk, nrows);
    double lp, lm;
    gram_eigenvalues(g, lp, lm);
    const double sp = std::sqrt(lp);
    if (sp <= 1.0) continue;  // feasible block, leave the bits alone
    const double sm = std::sqrt(lm);

    // eigenvector of the Gram matrix for lambda+; pick the better-conditioned form
    double vx = g.b, vy = lp - g.a;
    const double ax = lp - g.c, ay = g.b;
    if (vx * vx + vy * vy < ax * ax + ay * ay) {
      vx = ax;
      vy = ay;
    }
    const double vn = std::hypot(vx, vy);
    if (vn > 0.0) {
      vx /= vn;
      vy /= vn;
    } else {
      vx = 1.0;  // isotropic block (both singular values equal): any basis
      vy = 0.0;
    }

    // per-direction rescale; directions below the rank tolerance pass through
    const double eps = 1e-12 * std::fmax(1.0, sp);
    const double cp = 1.0 / sp;  // sp > 1 here, so min(sp,1)/sp
    const double cm = (sm > eps) ? std::fmin(sm, 1.0) / sm : 1.0;

    // M = V diag(cp, cm) V^T, with v- the perpendicular of v+
    const double m11 = cp * vx * vx + cm * vy * vy;
    const double m12 = (cp - cm) * vx * vy;
    const double m22 = cp * vy * vy + cm * vx * vx;
    for (int r = 0; r < nrows; ++r) {
      const double x = blk[2 * r], y = blk[2 * r + 1];
      blk[2 * r] = x * m11 + y * m12;
      blk[2 * r + 1] = x * m12 + y * m22;
    }
  }
}

PatchJacobianField project_binf_sinf(const PatchJacobianField& phi) {
  PatchJacobianField out = phi;
  project_binf_sinf_inplace(out);
  return out;
}

}  // namespace wstv
