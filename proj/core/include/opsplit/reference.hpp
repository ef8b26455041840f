#pragma once

#include <cstddef>
#include <vector>

#include "opsplit/fields.hpp"
#include "opsplit/substeps.hpp"
#include "opsplit/symbols.hpp"

namespace opsplit {

/// Unsplit solver for u_t + u u_x - K u = 0.
///
/// Integrating-factor RK4 (Lawson form): with E(h) = exp(k(xi) h), each step
/// integrates w' = E(-t) N(E(t) w), N(u) = -F[P(u u_x)], restarting the
/// integrating factor at the beginning of every step so E is only ever
/// evaluated for h and h/2. The linear part is exact; the nonlinear part is
/// fourth order in the step. Dealiasing and the blow-up guard follow the
/// BurgersConfig passed in.
class ReferenceSolver {
public:
  ReferenceSolver(const RealField& u0, Symbol symbol, double dt, bool nonlinear_on = true,
                  BurgersConfig guard = {});

  void advance(std::size_t steps);

  double time() const noexcept { return static_cast<double>(steps_taken_) * dt_; }
  std::size_t steps_taken() const noexcept { return steps_taken_; }
  double dt() const noexcept { return dt_; }
  RealField state() const;
  const SpectralField& spectral_state() const noexcept { return state_; }

private:
  SpectralField nonlinear_term(const SpectralField& v) const;
  void step();

  Symbol symbol_;
  double dt_;
  bool nonlinear_on_;
  BurgersConfig guard_;
  SpectralField state_;
  std::vector<Complex> full_;  // exp(k h)
  std::vector<Complex> half_;  // exp(k h / 2)
  std::vector<double> guard_weights_;
  double guard_limit_ = 0.0;
  std::size_t steps_taken_ = 0;
};

/// Solves to T_N = floor(T / dt_ref) dt_ref (same slack rule as step_count)
/// and returns u(T_N). Throws BlowupDetected through the H^sigma guard.
RealField reference_solve(const RealField& u0, const Symbol& sym, double T, double dt_ref,
                          bool nonlinearity_on = true, const BurgersConfig& guard = {});

/// States at t = k * interval for k = 0..outputs, each interval resolved by
/// substeps_per_output reference steps.
std::vector<RealField> reference_snapshots(const RealField& u0, const Symbol& sym, double interval,
                                           std::size_t outputs, std::size_t substeps_per_output,
                                           bool nonlinearity_on = true,
                                           const BurgersConfig& guard = {});

}  // namespace opsplit
