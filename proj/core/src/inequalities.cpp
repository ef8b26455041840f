#include "opsplit/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "opsplit/errors.hpp"
#include "opsplit/snapshot.hpp"
#include "opsplit/spectral.hpp"

namespace opsplit {

std::string to_string(InequalityId id) {
  switch (id) {
    case InequalityId::Commutator: return "commutator";
    case InequalityId::BilinearA: return "bilinear_a";
    case InequalityId::BilinearB: return "bilinear_b";
  }
  return "unknown";
}

InequalityId inequality_from_string(const std::string& name) {
  if (name == "commutator") return InequalityId::Commutator;
  if (name == "bilinear_a") return InequalityId::BilinearA;
  if (name == "bilinear_b") return InequalityId::BilinearB;
  throw std::invalid_argument("unknown inequality '" + name +
                              "' (expected commutator, bilinear_a, bilinear_b)");
}

namespace {

// Lifts a band-limited field to the doubled grid, where products are exact.
SpectralField lift(const RealField& u, const char* who) {
  const SpectralField c = forward(u);
  const long limit = static_cast<long>(u.size() / 4);
  if (c.bandwidth(1e-12 * std::max(1.0, c.max_abs())) > limit) {
    throw std::invalid_argument(std::string(who) + ": input must be band-limited to |m| <= n/4");
  }
  return resample(c, Grid(2 * u.size(), u.grid().length()));
}

SpectralField product(const SpectralField& a, const SpectralField& b) {
  return dealias(forward(inverse(a) * inverse(b)));
}

SpectralField d_bracket(const SpectralField& f, double s) {
  return apply_multiplier(f, [s](double xi) { return Complex(0.0, xi * std::pow(1.0 + xi * xi, 0.5 * s)); });
}

InequalityTerms finish(double lhs, double rhs, const char* who) {
  InequalityTerms t{lhs, rhs, 0.0};
  if (rhs == 0.0) {
    if (lhs > 1e-14) {
      throw InequalitySetupError(std::string(who) + ": right-hand side vanishes but left-hand side is " +
                                 format_double(lhs));
    }
    return t;
  }
  t.ratio = lhs / rhs;
  return t;
}

void require_pair(const RealField& f, const RealField& g, double s, double sigma, const char* who) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument(std::string(who) + ": grid mismatch");
  if (!(s >= sigma) || !std::isfinite(s)) {
    throw std::invalid_argument(std::string(who) + ": need s >= sigma");
  }
}

double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

InequalityTerms verify_commutator(const RealField& f, const RealField& g, double s, double sigma) {
  require_pair(f, g, s, sigma, "verify_commutator");
  const SpectralField F = lift(f, "verify_commutator");
  const SpectralField G = lift(g, "verify_commutator");

  SpectralField defect = d_bracket(product(F, G), s);
  defect -= product(d_bracket(F, s), G);
  defect -= product(F, d_bracket(G, s));

  const double lhs = sobolev_norm(defect, 0.0);
  const double rhs = sobolev_norm(F, s) * sobolev_norm(G, sigma) +
                     sobolev_norm(F, sigma) * sobolev_norm(G, s);
  return finish(lhs, rhs, "verify_commutator");
}

InequalityTerms verify_bilinear(const RealField& f, const RealField& g, double s, double sigma,
                                BilinearVariant variant) {
  require_pair(f, g, s, variant == BilinearVariant::B ? sigma : 0.0, "verify_bilinear");
  const SpectralField F = lift(f, "verify_bilinear");
  double lhs = 0.0;
  double rhs = 0.0;
  const double fs = sobolev_norm(F, s);
  if (variant == BilinearVariant::A) {
    const SpectralField G = lift(g, "verify_bilinear");
    lhs = std::abs(sobolev_inner(F, derivative(product(F, G)), s));
    rhs = fs * fs * sobolev_norm(G, s + 1.0);
  } else {
    lhs = std::abs(sobolev_inner(F, product(F, derivative(F)), s));
    rhs = fs * fs * sobolev_norm(F, sigma);
  }
  return finish(lhs, rhs, "verify_bilinear");
}

RealField random_trig_polynomial(const Grid& grid, long band, std::mt19937_64& rng) {
  if (band < 0 || 2 * band >= static_cast<long>(grid.size())) {
    throw std::invalid_argument("random_trig_polynomial: band outside the lattice");
  }
  SpectralField c(grid);
  c.at_mode(0) = 2.0 * uniform(rng) - 1.0;
  for (long m = 1; m <= band; ++m) {
    const double decay = std::pow(1.0 + static_cast<double>(m * m), -1.5);
    const Complex z(2.0 * uniform(rng) - 1.0, 2.0 * uniform(rng) - 1.0);
    c.at_mode(m) = decay * z;
    c.at_mode(-m) = decay * std::conj(z);
  }
  return inverse(c);
}

InequalityReport scan_inequality(InequalityId id, const InequalityScanConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("scan_inequality: need at least one trial");
  const Grid coarse(cfg.n, cfg.length);
  const Grid fine(2 * cfg.n, cfg.length);
  const auto band = static_cast<long>(cfg.n / 4);

  auto ratio = [&](const RealField& f, const RealField& g) {
    switch (id) {
      case InequalityId::Commutator: return verify_commutator(f, g, cfg.s, cfg.sigma).ratio;
      case InequalityId::BilinearA:
        return verify_bilinear(f, g, cfg.s, cfg.sigma, BilinearVariant::A).ratio;
      case InequalityId::BilinearB:
        return verify_bilinear(f, g, cfg.s, cfg.sigma, BilinearVariant::B).ratio;
    }
    return 0.0;
  };

  InequalityReport rep;
  rep.id = id;
  rep.trials = cfg.trials;
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const RealField f = random_trig_polynomial(coarse, band, rng);
    const RealField g = random_trig_polynomial(coarse, band, rng);
    rep.max_ratio = std::max(rep.max_ratio, ratio(f, g));
    rep.max_ratio_fine = std::max(rep.max_ratio_fine, ratio(resample(f, fine), resample(g, fine)));
  }
  if (rep.max_ratio > 0.0) {
    rep.ratio_stability = std::abs(rep.max_ratio_fine - rep.max_ratio) / rep.max_ratio;
  } else if (rep.max_ratio_fine > 0.0) {
    rep.ratio_stability = 1.0;
  }
  return rep;
}

void write_inequality_csv(std::ostream& os, const InequalityReport& rep) {
  os << "trials,max_ratio,ratio_stability\n"
     << rep.trials << ',' << format_double(rep.max_ratio) << ','
     << format_double(rep.ratio_stability) << '\n';
}

}  // namespace opsplit
