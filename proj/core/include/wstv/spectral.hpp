#pragma once

#include "wstv/image.hpp"
#include "wstv/patch_jacobian.hpp"
#include "wstv/weights.hpp"

namespace wstv {

struct SingularPair {
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
};

/// Singular values of an n x 2 block via the closed-form eigenvalues of the
/// 2x2 Gram matrix, clamped at zero against negative round-off.
SingularPair singular_pair(const double* block, int nrows);

/// Nuclear-norm regularizer value: sum over pixels of (sigma_plus +
/// sigma_minus) of the patch-Jacobian blocks. Only order p = 1 is supported;
/// other orders throw std::invalid_argument.
double wstv_value(const Image& u, const ConvKernel& kernel, const WeightField& weights, int p = 1);

/// Projects every per-pixel block onto the spectral-norm unit ball (largest
/// singular value <= 1), the Frobenius-nearest point. Feasible blocks are
/// returned bit-unchanged; singular directions below the rank tolerance pass
/// through unmodified.
PatchJacobianField project_binf_sinf(const PatchJacobianField& phi);

/// In-place variant used by the solver's hot loop.
void project_binf_sinf_inplace(PatchJacobianField& phi);

}  // namespace wstv
