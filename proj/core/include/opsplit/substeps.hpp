#pragma once

#include <cstddef>

#include "opsplit/fields.hpp"
#include "opsplit/symbols.hpp"

namespace opsplit {

/// Controls for the numerical inviscid Burgers flow.
struct BurgersConfig {
  double cfl_safety = 0.5;          ///< in (0, 1]
  std::size_t min_internal_steps = 4;
  bool dealias_on = true;
  /// Abort when an intermediate H^sigma norm exceeds this multiple of the initial one.
  double blowup_threshold = 10.0;
  double blowup_sigma = 2.0;
  /// Strength of an optional exp(-alpha (|m|/(n/2))^36) filter applied after
  /// each internal step; 0 disables it.
  double filter_strength = 0.0;

  /// Throws std::invalid_argument if a field is out of range.
  void validate() const;
};

/// Exact linear flow v_tau = K v over time tau: multiplies each Fourier
/// coefficient by exp(k(xi) tau). Negative tau is accepted only for symbols
/// that are non-dissipative on the grid's lattice.
RealField linear_step(const RealField& u, const Symbol& sym, double tau);
SpectralField linear_step(const SpectralField& u, const Symbol& sym, double tau);

/// Number of RK4 steps burgers_step takes for this input and dt:
/// max(min_internal_steps, ceil(dt * max|u| * xi_max / cfl_safety)).
std::size_t burgers_internal_steps(const RealField& u, double dt, const BurgersConfig& cfg);

/// Right-hand side -P(v v_x) with P the 2/3-rule projection (or identity
/// when dealiasing is off), derivative taken spectrally.
RealField burgers_rhs(const RealField& v, bool dealias_on = true);

/// Advances v_t + v v_x = 0 over dt with classical RK4. Throws
/// BlowupDetected if an intermediate H^sigma norm exceeds the threshold,
/// std::invalid_argument for negative dt or an invalid config.
RealField burgers_step(const RealField& u, double dt, const BurgersConfig& cfg = {});

/// As above with an explicit internal step count (for self-convergence checks).
RealField burgers_step_fixed(const RealField& u, double dt, std::size_t internal_steps,
                             const BurgersConfig& cfg = {});

}  // namespace opsplit
