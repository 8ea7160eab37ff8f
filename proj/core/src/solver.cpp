#include "wstv/solver.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "wstv/errors.hpp"

namespace wstv {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488016887242097;

// The objective/gradient evaluators accept tau == 0 (plain fidelity); only
// the iteration itself needs tau > 0 for its step size.
void validate(const SolverConfig& cfg, bool require_positive_tau = false) {
  if (!(require_positive_tau ? cfg.tau > 0.0 : cfg.tau >= 0.0)) {
    throw std::invalid_argument(require_positive_tau ? "solver: tau must be > 0"
                                                     : "solver: tau must be >= 0");
  }
  if (cfg.max_iter < 1) throw std::invalid_argument("solver: max_iter must be >= 1");
  if (cfg.rel_tol < 0.0) throw std::invalid_argument("solver: rel_tol must be >= 0");
  if (!(cfg.box_low < cfg.box_high)) throw std::invalid_argument("solver: box_low must be < box_high");
}

inline double clamp(double v, double lo, double hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

double image_norm(const Image& a) {
  double s = 0.0;
  for (double v : a.data) s += v * v;
  return std::sqrt(s);
}

}  // namespace

const char* model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::TV: return "tv";
    case ModelKind::STV: return "stv";
    case ModelKind::WSTV: return "wstv";
  }
  return "?";
}

Image project_box(const Image& u, double low, double high) {
  Image out = u;
  for (double& v : out.data) v = clamp(v, low, high);
  return out;
}

double momentum_step(double t) {
  if (!(t >= 1.0)) throw std::invalid_argument("momentum_step: t must be >= 1");
  return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
}

PatchJacobianField dual_gradient(const PatchJacobianField& phi, const Image& f,
                                 const SolverConfig& cfg, const ConvKernel& kernel,
                                 const WeightField& weights) {
  validate(cfg);
  const Image adj = jacobian_adjoint(phi, f.height, f.width, f.channels, kernel, weights);
  Image z(f.height, f.width, f.channels);
  for (std::size_t k = 0; k < f.data.size(); ++k) {
    z.data[k] = clamp(f.data[k] - cfg.tau * adj.data[k], cfg.box_low, cfg.box_high);
  }
  PatchJacobianField g = jacobian_apply(z, kernel, weights);
  for (double& v : g.data) v *= cfg.tau;
  return g;
}

double dual_objective(const PatchJacobianField& phi, const Image& f, const SolverConfig& cfg,
                      const ConvKernel& kernel, const WeightField& weights) {
  validate(cfg);
  const Image adj = jacobian_adjoint(phi, f.height, f.width, f.channels, kernel, weights);
  double resid = 0.0, fs = 0.0, ss = 0.0;
  for (std::size_t k = 0; k < f.data.size(); ++k) {
    const double s = f.data[k] - cfg.tau * adj.data[k];
    const double p = clamp(s, cfg.box_low, cfg.box_high);
    resid += (s - p) * (s - p);
    fs += f.data[k] * f.data[k];
    ss += s * s;
  }
  return 0.5 * resid + 0.5 * fs - 0.5 * ss;
}

double primal_objective(const Image& u, const Image& f, const SolverConfig& cfg,
                        const ConvKernel& kernel, const WeightField& weights) {
  validate(cfg);
  double fid = 0.0;
  for (std::size_t k = 0; k < f.data.size(); ++k) {
    const double d = u.data[k] - f.data[k];
    fid += d * d;
  }
  return 0.5 * fid + cfg.tau * wstv_value(u, kernel, weights);
}

std::string SolverTrace::to_csv() const {
  std::string out = "iteration,primal,dual,gap,rel_change,t\n";
  char buf[192];
  for (const TraceRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.iteration, r.primal,
                  r.dual, r.gap, r.rel_change, r.momentum);
    out += buf;
  }
  return out;
}

DenoiseResult fgp_denoise(const Image& f, const SolverConfig& cfg, const ConvKernel& kernel,
                          const WeightField& weights) {
  validate(cfg, /*require_positive_tau=*/true);
  const int h = f.height, w = f.width, m = f.channels;
  const int L = kernel.count();
  const std::size_t n = f.pixels();

  // Step applied to J z inside the dual ascent. The fixed Lipschitz bound
  // L(d) = 8*sqrt(2)*tau^2 gives tau/L(d) = 1/(8*sqrt(2)*tau); both
  // formulations must agree.
  const double lip_fixed = 8.0 * kSqrt2 * cfg.tau * cfg.tau;
  double step = 1.0 / (8.0 * kSqrt2 * cfg.tau);
  assert(std::abs(step - cfg.tau / lip_fixed) <= 1e-15 * step);
  if (cfg.use_estimated_lipschitz) {
    const double norm_sq = operator_norm_sq_estimate(h, w, m, kernel, weights, 30);
    if (norm_sq > 0.0) {
      const double lip_est = cfg.tau * cfg.tau * norm_sq;
      if (lip_est < lip_fixed) step = cfg.tau / lip_est;
    }
  }

  PatchJacobianField phi(static_cast<int>(n), L * m);       // current iterate
  PatchJacobianField phi_prev(static_cast<int>(n), L * m);  // previous iterate
  PatchJacobianField y = phi;                               // extrapolated point

  Image u_prev = project_box(f, cfg.box_low, cfg.box_high);
  Image u = u_prev;
  double t = 1.0;

  SolverTrace trace;
  if (cfg.record_trace) trace.rows.reserve(cfg.max_iter);

  int iter = 0;
  for (int i = 1; i <= cfg.max_iter; ++i) {
    iter = i;
    const double t_this = t;

    // z = P_C(f - tau * J^T y)
    const Image adj_y = jacobian_adjoint(y, h, w, m, kernel, weights);
    Image z(h, w, m);
    for (std::size_t k = 0; k < z.data.size(); ++k) {
      z.data[k] = clamp(f.data[k] - cfg.tau * adj_y.data[k], cfg.box_low, cfg.box_high);
    }

    // phi_i = P_B(y + step * J z)
    PatchJacobianField g = jacobian_apply(z, kernel, weights);
    for (std::size_t k = 0; k < g.data.size(); ++k) {
      g.data[k] = y.data[k] + step * g.data[k];
    }
    project_binf_sinf_inplace(g);
    std::swap(phi_prev, phi);
    phi = std::move(g);

    const double t_next = momentum_step(t);
    const double coef = (t - 1.0) / t_next;
    t = t_next;
    for (std::size_t k = 0; k < y.data.size(); ++k) {
      y.data[k] = phi.data[k] + coef * (phi.data[k] - phi_prev.data[k]);
    }

    // primal reconstruction drives the stopping rule
    const Image adj_phi = jacobian_adjoint(phi, h, w, m, kernel, weights);
    double dual_resid = 0.0, dual_fs = 0.0, dual_ss = 0.0;
    for (std::size_t k = 0; k < u.data.size(); ++k) {
      const double s = f.data[k] - cfg.tau * adj_phi.data[k];
      const double p = clamp(s, cfg.box_low, cfg.box_high);
      u.data[k] = p;
      dual_resid += (s - p) * (s - p);
      dual_fs += f.data[k] * f.data[k];
      dual_ss += s * s;
    }

    double diff = 0.0;
    for (std::size_t k = 0; k < u.data.size(); ++k) {
      const double d = u.data[k] - u_prev.data[k];
      diff += d * d;
    }
    diff = std::sqrt(diff);
    const double denom = image_norm(u_prev);
    const double rel = denom > 0.0 ? diff / denom
                                   : (diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);

    if (cfg.record_trace) {
      const double dual = 0.5 * dual_resid + 0.5 * dual_fs - 0.5 * dual_ss;
      const double primal = primal_objective(u, f, cfg, kernel, weights);
      trace.rows.push_back({i, primal, dual, primal - dual, rel, t_this});
    }

    if (i % 10 == 0 || i == cfg.max_iter) {
      for (double v : u.data) {
        if (!std::isfinite(v)) {
          throw DivergenceError("fgp_denoise: non-finite value at iteration " + std::to_string(i));
        }
      }
    }

    u_prev = u;
    if (rel <= cfg.rel_tol) break;
  }

  for (double v : u.data) {
    if (!std::isfinite(v)) {
      throw DivergenceError("fgp_denoise: non-finite value at iteration " + std::to_string(iter));
    }
  }
  trace.iterations = iter;
  return {std::move(u), std::move(trace), std::move(phi)};
}

}  // namespace wstv
