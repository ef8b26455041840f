#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opsplit/fields.hpp"
#include "opsplit/substeps.hpp"
#include "opsplit/symbols.hpp"

namespace opsplit {

enum class Scheme { Godunov, Strang };
enum class SubstepOrder {
  NonlinearFirst,  ///< Burgers flow first (Strang: half Burgers steps outside)
  LinearFirst,     ///< linear flow first (Strang: half linear steps outside)
};

std::string to_string(Scheme s);
std::string to_string(SubstepOrder o);

/// Number of whole steps N with N dt <= T. A relative slack of 1e-10 absorbs
/// rounding in T/dt, so T = 1, dt = 0.1 gives N = 10.
std::size_t step_count(double T, double dt);

struct SchemeConfig {
  Scheme scheme = Scheme::Godunov;
  SubstepOrder order = SubstepOrder::NonlinearFirst;
  double dt = 0.05;
  double T = 1.0;
  Symbol symbol = make_symbol("kdv");
  BurgersConfig burgers{};
  /// Test hook: when false the Burgers substep is replaced by the identity.
  bool nonlinear_on = true;
  /// Index of the H^sigma norm recorded in trajectory diagnostics.
  double diagnostic_sigma = 2.0;

  /// Throws std::invalid_argument unless 0 < dt <= T and the Burgers config is valid.
  void validate() const;
  std::size_t steps() const { return step_count(T, dt); }
};

/// One Godunov composite step over cfg.dt.
RealField godunov_step(const RealField& u, const SchemeConfig& cfg);
/// One Strang composite step over cfg.dt.
RealField strang_step(const RealField& u, const SchemeConfig& cfg);
/// Dispatches on cfg.scheme.
RealField composite_step(const RealField& u, const SchemeConfig& cfg);

struct StepDiagnostics {
  double t = 0.0;
  double l2 = 0.0;
  double mean = 0.0;     ///< integral of u over [0, L)
  double hs_sigma = 0.0; ///< H^sigma norm, sigma = cfg.diagnostic_sigma
  double imag_residue = 0.0;
};

StepDiagnostics diagnose(const RealField& u, double t, double sigma);

struct Trajectory {
  std::vector<double> times;
  std::vector<RealField> states;
  std::vector<StepDiagnostics> diagnostics;

  const RealField& final_state() const { return states.back(); }
};

/// Runs N = step_count(T, dt) composite steps from u0, recording every
/// state and its diagnostics. BlowupDetected carries the failing step index.
Trajectory evolve(const RealField& u0, const SchemeConfig& cfg);

/// Diagnostics CSV with header `t,l2,mean,hs_sigma`.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace opsplit
