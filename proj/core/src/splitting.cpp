#include "opsplit/splitting.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "opsplit/errors.hpp"
#include "opsplit/snapshot.hpp"
#include "opsplit/spectral.hpp"

namespace opsplit {

std::string to_string(Scheme s) { return s == Scheme::Godunov ? "godunov" : "strang"; }

std::string to_string(SubstepOrder o) {
  return o == SubstepOrder::NonlinearFirst ? "nonlinear_first" : "linear_first";
}

std::size_t step_count(double T, double dt) {
  if (!(dt > 0.0) || !(T > 0.0)) throw std::invalid_argument("step_count: T and dt must be > 0");
  const double q = T / dt;
  return static_cast<std::size_t>(std::floor(q + 1e-10 * std::max(1.0, q)));
}

void SchemeConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("scheme: dt must be > 0");
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("scheme: T must be > 0");
  if (steps() < 1) {
    throw std::invalid_argument("scheme: dt = " + format_double(dt) + " exceeds T = " +
                                format_double(T));
  }
  burgers.validate();
}

namespace {

RealField nonlinear(const RealField& u, double dt, const SchemeConfig& cfg) {
  return cfg.nonlinear_on ? burgers_step(u, dt, cfg.burgers) : u;
}

}  // namespace

RealField godunov_step(const RealField& u, const SchemeConfig& cfg) {
  if (cfg.order == SubstepOrder::NonlinearFirst) {
    return linear_step(nonlinear(u, cfg.dt, cfg), cfg.symbol, cfg.dt);
  }
  return nonlinear(linear_step(u, cfg.symbol, cfg.dt), cfg.dt, cfg);
}

RealField strang_step(const RealField& u, const SchemeConfig& cfg) {
  const double half = 0.5 * cfg.dt;
  if (cfg.order == SubstepOrder::NonlinearFirst) {
    RealField v = nonlinear(u, half, cfg);
    v = linear_step(v, cfg.symbol, cfg.dt);
    return nonlinear(v, half, cfg);
  }
  RealField v = linear_step(u, cfg.symbol, half);
  v = nonlinear(v, cfg.dt, cfg);
  return linear_step(v, cfg.symbol, half);
}

RealField composite_step(const RealField& u, const SchemeConfig& cfg) {
  return cfg.scheme == Scheme::Godunov ? godunov_step(u, cfg) : strang_step(u, cfg);
}

StepDiagnostics diagnose(const RealField& u, double t, double sigma) {
  const SpectralField c = forward(u);
  StepDiagnostics d;
  d.t = t;
  d.l2 = sobolev_norm(c, 0.0);
  d.mean = integral(u);
  d.hs_sigma = sobolev_norm(c, sigma);
  d.imag_residue = c.hermitian_residue();
  return d;
}

Trajectory evolve(const RealField& u0, const SchemeConfig& cfg) {
  cfg.validate();
  const std::size_t n_steps = cfg.steps();
  Trajectory traj;
  traj.times.reserve(n_steps + 1);
  traj.states.reserve(n_steps + 1);
  traj.diagnostics.reserve(n_steps + 1);

  traj.times.push_back(0.0);
  traj.states.push_back(u0);
  traj.diagnostics.push_back(diagnose(u0, 0.0, cfg.diagnostic_sigma));
  for (std::size_t n = 1; n <= n_steps; ++n) {
    RealField next(u0.grid());
    try {
      next = composite_step(traj.states.back(), cfg);
    } catch (const BlowupDetected& e) {
      throw e.at_step(n);
    }
    const double t = static_cast<double>(n) * cfg.dt;
    traj.diagnostics.push_back(diagnose(next, t, cfg.diagnostic_sigma));
    traj.times.push_back(t);
    traj.states.push_back(std::move(next));
  }
  return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,l2,mean,hs_sigma\n";
  for (const auto& d : traj.diagnostics) {
    os << format_double(d.t) << ',' << format_double(d.l2) << ',' << format_double(d.mean) << ','
       << format_double(d.hs_sigma) << '\n';
  }
}

}  // namespace opsplit
