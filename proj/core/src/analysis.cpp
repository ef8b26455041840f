#include "opsplit/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "opsplit/errors.hpp"
#include "opsplit/reference.hpp"
#include "opsplit/snapshot.hpp"
#include "opsplit/spectral.hpp"

namespace opsplit {

namespace {

constexpr double kRichardsonRk4 = 15.0;  // 2^4 - 1
constexpr double kRoundoffFloor = 1e-13;

// Runs task(i) for i in [0, count) on up to `threads` workers. Results are
// written by index, so the outcome does not depend on scheduling. The first
// exception (by index) is rethrown.
template <class Task>
void parallel_for(std::size_t count, std::size_t threads, Task task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  std::vector<std::exception_ptr> errors(count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            task(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

// Integer number of reference steps per interval with step <= dt_ref_target.
std::size_t divisions_for(double interval, double dt_ref_target) {
  const double q = interval / dt_ref_target;
  const auto k = static_cast<std::size_t>(std::ceil(q - 1e-9 * q));
  return std::max<std::size_t>(k, 1);
}

SlopeFit fit_admitted(double sigma, std::span<const double> dts, std::span<const double> errors,
                      const std::vector<bool>& admitted) {
  SlopeFit out;
  out.sigma = sigma;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    if (!admitted[i]) continue;
    xs.push_back(dts[i]);
    ys.push_back(errors[i]);
  }
  out.admitted = xs.size();
  out.reliable = out.admitted >= 3;
  if (out.admitted >= 2) out.fit = fit_loglog(xs, ys);
  // dts are decreasing, so the errors should be too.
  out.monotone = out.admitted >= 2;
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (!(ys[i] < ys[i - 1])) out.monotone = false;
  }
  return out;
}

void validate_sigmas(std::span<const double> sigmas) {
  if (sigmas.empty()) throw std::invalid_argument("need at least one sigma");
  for (double s : sigmas) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::invalid_argument("sigma must be finite and >= 0");
  }
}

}  // namespace

LogLogFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("fit_loglog: need at least two (x, y) pairs");
  }
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::invalid_argument("fit_loglog: values must be positive");
    }
    lx[i] = std::log2(xs[i]);
    ly[i] = std::log2(ys[i]);
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double det = n * sxx - sx * sx;
  if (det <= 0.0) throw std::invalid_argument("fit_loglog: x values must be distinct");
  LogLogFit fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double mean_y = sy / n;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += r * r;
    ss_tot += (ly[i] - mean_y) * (ly[i] - mean_y);
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

double reference_floor(double richardson_diff, double solution_norm) {
  return std::max(richardson_diff / kRichardsonRk4, kRoundoffFloor * std::max(1.0, solution_norm));
}

std::vector<SigmaError> trajectory_error(std::span<const RealField> states,
                                         std::span<const RealField> reference, std::size_t stride,
                                         std::span<const double> sigmas) {
  if (states.empty()) throw std::invalid_argument("trajectory_error: no states");
  if ((states.size() - 1) * stride >= reference.size()) {
    throw std::invalid_argument("trajectory_error: reference too short");
  }
  std::vector<SigmaError> out;
  std::vector<std::vector<double>> weights;
  for (double s : sigmas) {
    out.push_back({s, 0.0, 0.0});
    weights.push_back(sobolev_weights(states[0].grid(), s));
  }
  for (std::size_t n = 0; n < states.size(); ++n) {
    const SpectralField diff = forward(states[n] - reference[n * stride]);
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
      const double e = sobolev_norm(diff, weights[k]);
      out[k].sup = std::max(out[k].sup, e);
      if (n + 1 == states.size()) out[k].endpoint = e;
    }
  }
  return out;
}

std::vector<SigmaError> global_error(const SchemeConfig& cfg, const RealField& u0,
                                     std::span<const double> sigmas,
                                     const GlobalErrorOptions& opts) {
  cfg.validate();
  validate_sigmas(sigmas);
  const double target = opts.dt_ref > 0.0 ? opts.dt_ref : cfg.dt / 64.0;
  const std::size_t per_step = divisions_for(cfg.dt, target);

  const Trajectory traj = evolve(u0, cfg);
  const std::size_t n_steps = traj.states.size() - 1;
  const auto ref = reference_snapshots(u0, cfg.symbol, cfg.dt, n_steps, per_step, cfg.nonlinear_on,
                                       cfg.burgers);
  if (opts.track_sup) return trajectory_error(traj.states, ref, 1, sigmas);

  std::vector<SigmaError> out;
  const SpectralField diff = forward(traj.final_state() - ref.back());
  for (double s : sigmas) {
    const double e = sobolev_norm(diff, s);
    out.push_back({s, e, e});
  }
  return out;
}

const SlopeFit& ConvergenceReport::fit(double sigma) const {
  for (const auto& f : fits) {
    if (f.sigma == sigma) return f;
  }
  throw std::out_of_range("no fit for sigma = " + format_double(sigma));
}

double ConvergenceReport::slope(double sigma) const {
  const auto& f = fit(sigma);
  if (!f.reliable) {
    throw FitUnreliable("convergence study " + scheme + "/" + symbol + ": only " +
                        std::to_string(f.admitted) + " points above the reference floor at sigma = " +
                        format_double(sigma));
  }
  return f.fit.slope;
}

double ConvergenceReport::r2(double sigma) const {
  slope(sigma);
  return fit(sigma).fit.r2;
}

bool ConvergenceReport::degenerate() const {
  return std::none_of(fits.begin(), fits.end(), [](const SlopeFit& f) { return f.reliable; });
}

ConvergenceReport convergence_study(const SchemeConfig& base, const RealField& u0,
                                    std::span<const double> dts, std::span<const double> sigmas,
                                    const StudyOptions& opts) {
  validate_sigmas(sigmas);
  if (dts.size() < 4) throw std::invalid_argument("convergence_study: need at least 4 dts");
  for (std::size_t i = 1; i < dts.size(); ++i) {
    if (!near(dts[i], 0.5 * dts[i - 1])) {
      throw std::invalid_argument("convergence_study: dts must halve at every entry");
    }
  }
  if (opts.ref_divisions < 1) throw std::invalid_argument("convergence_study: ref_divisions must be >= 1");
  for (double dt : dts) {
    SchemeConfig c = base;
    c.dt = dt;
    c.validate();
  }

  ConvergenceReport rep;
  rep.scheme = to_string(base.scheme);
  rep.order = to_string(base.order);
  rep.symbol = base.symbol.label();
  rep.dts.assign(dts.begin(), dts.end());
  rep.sigmas.assign(sigmas.begin(), sigmas.end());

  const double dt_min = dts.back();
  const std::size_t fine_outputs = step_count(base.T, dt_min);
  rep.dt_ref = dt_min / static_cast<double>(opts.ref_divisions);

  // Reference at dt_ref and at 2 dt_ref, both sampled every dt_min.
  std::vector<RealField> ref, ref_coarse;
  const std::size_t coarse_div = std::max<std::size_t>(1, opts.ref_divisions / 2);
  parallel_for(2, opts.threads, [&](std::size_t which) {
    if (which == 0) {
      ref = reference_snapshots(u0, base.symbol, dt_min, fine_outputs, opts.ref_divisions,
                                base.nonlinear_on, base.burgers);
    } else {
      ref_coarse = reference_snapshots(u0, base.symbol, dt_min, fine_outputs, coarse_div,
                                       base.nonlinear_on, base.burgers);
    }
  });

  const auto self = trajectory_error(ref_coarse, ref, 1, sigmas);
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    double size = 0.0;
    for (const auto& r : ref) size = std::max(size, sobolev_norm(r, sigmas[k]));
    rep.reference_floor.push_back(reference_floor(self[k].sup, size));
  }

  std::vector<std::vector<SigmaError>> per_dt(dts.size());
  parallel_for(dts.size(), opts.threads, [&](std::size_t i) {
    SchemeConfig c = base;
    c.dt = dts[i];
    const Trajectory traj = evolve(u0, c);
    const auto stride = static_cast<std::size_t>(std::llround(dts[i] / dt_min));
    per_dt[i] = trajectory_error(traj.states, ref, stride, sigmas);
  });

  for (std::size_t i = 0; i < dts.size(); ++i) {
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
      const SigmaError& e = per_dt[i][k];
      ConvergenceSample s;
      s.dt = dts[i];
      s.sigma = sigmas[k];
      s.endpoint_error = e.endpoint;
      s.sup_error = e.sup;
      s.error = e.error();
      s.admitted = s.error > opts.floor_factor * rep.reference_floor[k];
      rep.samples.push_back(s);
    }
  }

  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    std::vector<double> errs;
    std::vector<bool> adm;
    for (std::size_t i = 0; i < dts.size(); ++i) {
      const auto& s = rep.samples[i * sigmas.size() + k];
      errs.push_back(s.error);
      adm.push_back(s.admitted);
    }
    rep.fits.push_back(fit_admitted(sigmas[k], dts, errs, adm));
  }
  return rep;
}

double LocalOrderReport::slope() const {
  if (!fit.reliable) {
    throw FitUnreliable("local order: only " + std::to_string(fit.admitted) +
                        " points above the reference floor");
  }
  return fit.fit.slope;
}

LocalOrderReport local_error_order(const SchemeConfig& base, const RealField& u0,
                                   std::span<const double> dts, double sigma,
                                   std::size_t ref_divisions, double floor_factor) {
  const double sig[] = {sigma};
  validate_sigmas(sig);
  if (dts.size() < 3) throw std::invalid_argument("local_error_order: need at least 3 dts");
  if (ref_divisions < 2) throw std::invalid_argument("local_error_order: ref_divisions must be >= 2");

  LocalOrderReport rep;
  rep.sigma = sigma;
  const auto weights = sobolev_weights(u0.grid(), sigma);
  const double size = sobolev_norm(forward(u0), weights);
  for (double dt : dts) {
    SchemeConfig c = base;
    c.dt = dt;
    c.T = dt;
    c.validate();
    const RealField split = composite_step(u0, c);
    ReferenceSolver fine(u0, c.symbol, dt / static_cast<double>(ref_divisions), c.nonlinear_on,
                         c.burgers);
    fine.advance(ref_divisions);
    ReferenceSolver coarse(u0, c.symbol, dt / static_cast<double>(ref_divisions / 2),
                           c.nonlinear_on, c.burgers);
    coarse.advance(ref_divisions / 2);
    const RealField ref = fine.state();
    const double err = sobolev_norm(forward(split - ref), weights);
    const double floor = reference_floor(sobolev_norm(forward(coarse.state() - ref), weights), size);
    rep.dts.push_back(dt);
    rep.errors.push_back(err);
    rep.floors.push_back(floor);
    rep.admitted.push_back(err > floor_factor * floor);
  }
  rep.fit = fit_admitted(sigma, rep.dts, rep.errors, rep.admitted);
  return rep;
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& rep) {
  os << "dt,sigma,error,admitted\n";
  for (const auto& s : rep.samples) {
    os << format_double(s.dt) << ',' << format_double(s.sigma) << ',' << format_double(s.error)
       << ',' << (s.admitted ? 1 : 0) << '\n';
  }
}

void write_local_order_csv(std::ostream& os, const LocalOrderReport& rep) {
  os << "dt,sigma,error,admitted\n";
  for (std::size_t i = 0; i < rep.dts.size(); ++i) {
    os << format_double(rep.dts[i]) << ',' << format_double(rep.sigma) << ','
       << format_double(rep.errors[i]) << ',' << (rep.admitted[i] ? 1 : 0) << '\n';
  }
}

void write_convergence_summary(std::ostream& os, const ConvergenceReport& rep) {
  os << "scheme=" << rep.scheme << '\n'
     << "order=" << rep.order << '\n'
     << "symbol=" << rep.symbol << '\n'
     << "dt_ref=" << format_double(rep.dt_ref) << '\n';
  for (std::size_t k = 0; k < rep.sigmas.size(); ++k) {
    os << "reference_floor_" << format_double(rep.sigmas[k]) << '='
       << format_double(rep.reference_floor[k]) << '\n';
  }
  os << "# dt sigma endpoint_error sup_error admitted\n";
  for (const auto& s : rep.samples) {
    os << "# " << format_double(s.dt) << ' ' << format_double(s.sigma) << ' '
       << format_double(s.endpoint_error) << ' ' << format_double(s.sup_error) << ' '
       << (s.admitted ? "yes" : "no") << '\n';
  }
  for (const auto& f : rep.fits) {
    const std::string tag = format_double(f.sigma);
    os << "admitted_" << tag << '=' << f.admitted << '\n';
    os << "monotone_" << tag << '=' << (f.monotone ? "true" : "false") << '\n';
    if (f.reliable) {
      os << "slope_" << tag << '=' << format_double(f.fit.slope) << '\n';
      os << "r2_" << tag << '=' << format_double(f.fit.r2) << '\n';
    } else {
      os << "slope_" << tag << "=nan\n";
      os << "r2_" << tag << "=nan\n";
      os << "fit_" << tag << "=unreliable\n";
    }
  }
}

}  // namespace opsplit
