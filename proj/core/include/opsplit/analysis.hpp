#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "opsplit/fields.hpp"
#include "opsplit/splitting.hpp"

namespace opsplit {

/// Ordinary least squares of log2(y) against log2(x).
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Needs at least two points with distinct x; all values must be positive.
LogLogFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

struct SigmaError {
  double sigma = 0.0;
  double endpoint = 0.0;  ///< ||v(T_N) - u(T_N)||_{H^sigma}
  double sup = 0.0;       ///< max over t_n of the same (includes the endpoint)
  /// Value used for fitting: the larger of the two.
  double error() const noexcept { return sup > endpoint ? sup : endpoint; }
};

struct GlobalErrorOptions {
  /// Reference step; 0 selects dt / 64.
  double dt_ref = 0.0;
  /// Compare at every t_n, not just the endpoint.
  bool track_sup = true;
};

/// Split solution against the integrating-factor reference at matched
/// times t_n = n dt. dt_ref is shrunk if needed so that dt is an integer
/// multiple of it. The reference inherits cfg.nonlinear_on and cfg.burgers.
std::vector<SigmaError> global_error(const SchemeConfig& cfg, const RealField& u0,
                                     std::span<const double> sigmas,
                                     const GlobalErrorOptions& opts = {});

/// H^sigma distances between states[n] and reference[n * stride].
std::vector<SigmaError> trajectory_error(std::span<const RealField> states,
                                         std::span<const RealField> reference, std::size_t stride,
                                         std::span<const double> sigmas);

struct ConvergenceSample {
  double dt = 0.0;
  double sigma = 0.0;
  double endpoint_error = 0.0;
  double sup_error = 0.0;
  double error = 0.0;  ///< value entering the fit
  bool admitted = false;
};

struct SlopeFit {
  double sigma = 0.0;
  std::size_t admitted = 0;
  bool reliable = false;  ///< at least 3 admitted points
  bool monotone = false;  ///< error strictly increasing in dt over admitted points
  LogLogFit fit;
};

struct ConvergenceReport {
  std::string scheme;
  std::string order;
  std::string symbol;
  std::vector<double> dts;       ///< decreasing
  std::vector<double> sigmas;
  double dt_ref = 0.0;
  std::vector<double> reference_floor;  ///< per sigma
  std::vector<ConvergenceSample> samples;  ///< by decreasing dt, then sigma
  std::vector<SlopeFit> fits;              ///< per sigma

  const SlopeFit& fit(double sigma) const;
  /// Throws FitUnreliable when fewer than 3 points were admitted.
  double slope(double sigma) const;
  double r2(double sigma) const;
  /// True when no sigma has a reliable fit: every error sits on the reference floor.
  bool degenerate() const;
};

struct StudyOptions {
  /// dt_ref = (smallest dt) / ref_divisions.
  std::size_t ref_divisions = 64;
  /// Points with error <= floor_factor * reference_floor are excluded from the fit.
  double floor_factor = 10.0;
  /// Worker threads for the per-dt runs; 0 picks hardware concurrency.
  std::size_t threads = 0;
};

/// Global-error refinement study over dyadically decreasing dts (at least 4).
/// The reference is computed once at dt_ref and sampled at multiples of the
/// smallest dt; a second run at 2 dt_ref gives the Richardson estimate of its
/// own error (the reference floor). Throws std::invalid_argument for
/// non-dyadic or too few dts.
ConvergenceReport convergence_study(const SchemeConfig& base, const RealField& u0,
                                    std::span<const double> dts, std::span<const double> sigmas,
                                    const StudyOptions& opts = {});

struct LocalOrderReport {
  double sigma = 0.0;
  std::vector<double> dts;
  std::vector<double> errors;
  std::vector<double> floors;
  std::vector<bool> admitted;
  SlopeFit fit;

  /// Throws FitUnreliable when fewer than 3 points were admitted.
  double slope() const;
};

/// One composite step per dt against reference_solve(u0, dt, dt / ref_divisions).
LocalOrderReport local_error_order(const SchemeConfig& base, const RealField& u0,
                                   std::span<const double> dts, double sigma,
                                   std::size_t ref_divisions = 256, double floor_factor = 10.0);

/// `dt,sigma,error,admitted` rows.
void write_convergence_csv(std::ostream& os, const ConvergenceReport& rep);
void write_local_order_csv(std::ostream& os, const LocalOrderReport& rep);
/// Human-readable summary ending in `slope_<sigma>=...` and `r2_<sigma>=...` lines.
void write_convergence_summary(std::ostream& os, const ConvergenceReport& rep);

/// Admission threshold floor for a reference estimate: the Richardson
/// estimate diff / 15, bounded below by accumulated roundoff relative to
/// the solution size.
double reference_floor(double richardson_diff, double solution_norm);

}  // namespace opsplit
