#include "opsplit/substeps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opsplit/errors.hpp"
#include "opsplit/snapshot.hpp"
#include "opsplit/spectral.hpp"

namespace opsplit {

void BurgersConfig::validate() const {
  if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) {
    throw std::invalid_argument("burgers: cfl_safety must lie in (0, 1], got " +
                                format_double(cfl_safety));
  }
  if (min_internal_steps < 1) throw std::invalid_argument("burgers: min_internal_steps must be >= 1");
  if (!(blowup_threshold > 1.0)) {
    throw std::invalid_argument("burgers: blowup_threshold must be > 1, got " +
                                format_double(blowup_threshold));
  }
  if (!(blowup_sigma >= 0.0)) throw std::invalid_argument("burgers: blowup_sigma must be >= 0");
  if (!(filter_strength >= 0.0)) throw std::invalid_argument("burgers: filter_strength must be >= 0");
}

SpectralField linear_step(const SpectralField& u, const Symbol& sym, double tau) {
  if (!std::isfinite(tau)) throw std::invalid_argument("linear_step: tau must be finite");
  if (tau < 0.0 && is_dissipative_on(sym, u.grid().xis())) {
    throw std::invalid_argument("linear_step: negative tau with dissipative symbol '" +
                                sym.name() + "'");
  }
  if (tau == 0.0) return u;
  return apply_multiplier(u, [&](double xi) { return std::exp(sym(xi) * tau); });
}

RealField linear_step(const RealField& u, const Symbol& sym, double tau) {
  if (tau == 0.0) return u;
  return inverse(linear_step(forward(u), sym, tau));
}

std::size_t burgers_internal_steps(const RealField& u, double dt, const BurgersConfig& cfg) {
  const double cells = dt * u.max_abs() * u.grid().xi_max() / cfg.cfl_safety;
  const auto by_cfl = static_cast<std::size_t>(std::ceil(cells));
  return std::max(cfg.min_internal_steps, by_cfl);
}

RealField burgers_rhs(const RealField& v, bool dealias_on) {
  const RealField vx = inverse(derivative(forward(v)));
  RealField prod = v * vx;
  if (dealias_on) prod = inverse(dealias(forward(prod)));
  prod *= -1.0;
  return prod;
}

namespace {

void apply_filter(RealField& v, double strength) {
  const Grid& g = v.grid();
  const double half = static_cast<double>(g.size() / 2);
  auto c = forward(v);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double r = std::abs(static_cast<double>(g.mode(j))) / half;
    c[j] *= std::exp(-strength * std::pow(r, 36));
  }
  v = inverse(c);
}

}  // namespace

RealField burgers_step_fixed(const RealField& u, double dt, std::size_t internal_steps,
                             const BurgersConfig& cfg) {
  cfg.validate();
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("burgers_step: dt must be finite and >= 0");
  }
  if (internal_steps < 1) throw std::invalid_argument("burgers_step: need at least one step");
  if (dt == 0.0) return u;

  const auto weights = sobolev_weights(u.grid(), cfg.blowup_sigma);
  const double initial = sobolev_norm(forward(u), weights);
  const double limit = cfg.blowup_threshold * initial;

  const double h = dt / static_cast<double>(internal_steps);
  RealField v = u;
  for (std::size_t step = 0; step < internal_steps; ++step) {
    const RealField k1 = burgers_rhs(v, cfg.dealias_on);
    const RealField k2 = burgers_rhs(v + (0.5 * h) * k1, cfg.dealias_on);
    const RealField k3 = burgers_rhs(v + (0.5 * h) * k2, cfg.dealias_on);
    const RealField k4 = burgers_rhs(v + h * k3, cfg.dealias_on);
    auto vs = v.samples();
    for (std::size_t j = 0; j < vs.size(); ++j) {
      vs[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    if (cfg.filter_strength > 0.0) apply_filter(v, cfg.filter_strength);

    const double norm = sobolev_norm(forward(v), weights);
    if (!std::isfinite(norm) || norm > limit) {
      throw BlowupDetected("burgers_step: H^" + format_double(cfg.blowup_sigma) + " norm " +
                               format_double(norm) + " exceeds " + format_double(limit) +
                               " after internal step " + std::to_string(step + 1) + " of " +
                               std::to_string(internal_steps),
                           norm, limit);
    }
  }
  return v;
}

RealField burgers_step(const RealField& u, double dt, const BurgersConfig& cfg) {
  cfg.validate();
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("burgers_step: dt must be finite and >= 0");
  }
  return burgers_step_fixed(u, dt, burgers_internal_steps(u, dt, cfg), cfg);
}

}  // namespace opsplit
