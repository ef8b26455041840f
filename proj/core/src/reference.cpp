#include "opsplit/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "opsplit/errors.hpp"
#include "opsplit/snapshot.hpp"
#include "opsplit/spectral.hpp"
#include "opsplit/splitting.hpp"

namespace opsplit {

ReferenceSolver::ReferenceSolver(const RealField& u0, Symbol symbol, double dt, bool nonlinear_on,
                                 BurgersConfig guard)
    : symbol_(std::move(symbol)),
      dt_(dt),
      nonlinear_on_(nonlinear_on),
      guard_(guard),
      state_(forward(u0)) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("reference: dt_ref must be > 0");
  guard_.validate();
  const Grid& g = u0.grid();
  full_ = multiplier_table(g, [&](double xi) { return std::exp(symbol_(xi) * dt_); });
  half_ = multiplier_table(g, [&](double xi) { return std::exp(symbol_(xi) * (0.5 * dt_)); });
  guard_weights_ = sobolev_weights(g, guard_.blowup_sigma);
  guard_limit_ = guard_.blowup_threshold * sobolev_norm(state_, guard_weights_);
}

SpectralField ReferenceSolver::nonlinear_term(const SpectralField& v) const {
  const RealField u = inverse(v);
  const RealField ux = inverse(derivative(v));
  SpectralField n = forward(u * ux);
  if (guard_.dealias_on) n = dealias(std::move(n));
  n *= -1.0;
  return n;
}

void ReferenceSolver::step() {
  const std::size_t n = state_.size();
  const double h = dt_;
  const Grid& g = state_.grid();
  auto& v = state_;

  if (!nonlinear_on_) {
    v = apply_multiplier(std::move(v), std::span<const Complex>(full_));
    ++steps_taken_;
    return;
  }

  SpectralField stage(g);
  const SpectralField k1 = nonlinear_term(v);
  for (std::size_t j = 0; j < n; ++j) stage[j] = half_[j] * (v[j] + 0.5 * h * k1[j]);
  const SpectralField k2 = nonlinear_term(stage);
  for (std::size_t j = 0; j < n; ++j) stage[j] = half_[j] * v[j] + 0.5 * h * k2[j];
  const SpectralField k3 = nonlinear_term(stage);
  for (std::size_t j = 0; j < n; ++j) stage[j] = full_[j] * v[j] + h * half_[j] * k3[j];
  const SpectralField k4 = nonlinear_term(stage);
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = full_[j] * v[j] +
           h / 6.0 * (full_[j] * k1[j] + 2.0 * half_[j] * (k2[j] + k3[j]) + k4[j]);
  }
  // exp tables carry 0 at the Nyquist slot; keep the state consistent with that.
  v[g.nyquist_slot()] = 0.0;
  ++steps_taken_;

  const double norm = sobolev_norm(v, guard_weights_);
  if (!std::isfinite(norm) || norm > guard_limit_) {
    throw BlowupDetected("reference_solve: H^" + format_double(guard_.blowup_sigma) + " norm " +
                             format_double(norm) + " exceeds " + format_double(guard_limit_) +
                             " at t = " + format_double(time()),
                         norm, guard_limit_, steps_taken_);
  }
}

void ReferenceSolver::advance(std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) step();
}

RealField ReferenceSolver::state() const { return inverse(state_); }

RealField reference_solve(const RealField& u0, const Symbol& sym, double T, double dt_ref,
                          bool nonlinearity_on, const BurgersConfig& guard) {
  if (!(dt_ref > 0.0) || !(T > 0.0)) throw std::invalid_argument("reference: T and dt_ref must be > 0");
  if (dt_ref > T * (1.0 + 1e-10)) {
    throw std::invalid_argument("reference: dt_ref = " + format_double(dt_ref) + " exceeds T = " +
                                format_double(T));
  }
  ReferenceSolver solver(u0, sym, dt_ref, nonlinearity_on, guard);
  solver.advance(step_count(T, dt_ref));
  return solver.state();
}

std::vector<RealField> reference_snapshots(const RealField& u0, const Symbol& sym, double interval,
                                           std::size_t outputs, std::size_t substeps_per_output,
                                           bool nonlinearity_on, const BurgersConfig& guard) {
  if (substeps_per_output < 1) throw std::invalid_argument("reference: substeps_per_output must be >= 1");
  ReferenceSolver solver(u0, sym, interval / static_cast<double>(substeps_per_output),
                         nonlinearity_on, guard);
  std::vector<RealField> out;
  out.reserve(outputs + 1);
  out.push_back(u0);
  for (std::size_t k = 0; k < outputs; ++k) {
    solver.advance(substeps_per_output);
    out.push_back(solver.state());
  }
  return out;
}

}  // namespace opsplit
