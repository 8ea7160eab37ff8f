#pragma once

#include <string>
#include <vector>

#include "wstv/image.hpp"
#include "wstv/patch_jacobian.hpp"
#include "wstv/spectral.hpp"
#include "wstv/weights.hpp"

namespace wstv {

/// Which regularizer the solve realizes. All three run the same code path:
/// TV is the delta kernel with uniform weights, STV keeps the kernel but uses
/// uniform weights, WSTV uses both.
enum class ModelKind { TV, STV, WSTV };

const char* model_name(ModelKind kind);

struct SolverConfig {
  double tau = 0.05;          // regularization weight, > 0
  int max_iter = 100;
  double rel_tol = 1e-5;      // relative change of the primal reconstruction
  double box_low = 0.0;
  double box_high = 1.0;
  bool record_trace = false;  // per-iteration objectives cost extra operator applications
  bool use_estimated_lipschitz = false;  // tighter power-iteration constant instead of the fixed bound
};

struct TraceRow {
  int iteration = 0;
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
  double rel_change = 0.0;
  double momentum = 0.0;  // t_i
};

struct SolverTrace {
  std::vector<TraceRow> rows;
  int iterations = 0;

  /// CSV with header iteration,primal,dual,gap,rel_change,t
  std::string to_csv() const;
};

/// Elementwise clamp to [low, high].
Image project_box(const Image& u, double low, double high);

/// FISTA momentum update t_{i+1} = (1 + sqrt(1 + 4 t_i^2)) / 2.
double momentum_step(double t);

/// Gradient of the dual objective: tau * J(P_box(f - tau * J^T phi)).
PatchJacobianField dual_gradient(const PatchJacobianField& phi, const Image& f,
                                 const SolverConfig& cfg, const ConvKernel& kernel,
                                 const WeightField& weights);

/// Dual objective at phi: with s = f - tau*J^T phi,
/// (1/2)||s - P_box(s)||^2 + (1/2)||f||^2 - (1/2)||s||^2.
double dual_objective(const PatchJacobianField& phi, const Image& f, const SolverConfig& cfg,
                      const ConvKernel& kernel, const WeightField& weights);

/// Primal objective at u: (1/2)||u - f||^2 + tau * wstv_value(u).
double primal_objective(const Image& u, const Image& f, const SolverConfig& cfg,
                        const ConvKernel& kernel, const WeightField& weights);

struct DenoiseResult {
  Image image;
  SolverTrace trace;
  PatchJacobianField dual;  // final dual iterate, feasible in the spectral ball
};

/// Fast gradient projection on the dual problem. Maintains the iterate and the
/// extrapolated point as separate sequences; stops when the relative change of
/// the primal reconstruction drops below cfg.rel_tol or at cfg.max_iter.
/// Throws DivergenceError naming the iteration if non-finite values appear.
DenoiseResult fgp_denoise(const Image& f, const SolverConfig& cfg, const ConvKernel& kernel,
                          const WeightField& weights);

}  // namespace wstv
