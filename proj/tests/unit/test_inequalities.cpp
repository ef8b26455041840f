#include "doctest.h"

#include <cmath>
#include <sstream>

#include "opsplit/errors.hpp"
#include "opsplit/inequalities.hpp"
#include "opsplit/spectral.hpp"

using namespace opsplit;

namespace {

RealField cosine(const Grid& g) {
  return RealField::sample(g, [](double x) { return std::cos(x); });
}

RealField sine(const Grid& g) {
  return RealField::sample(g, [](double x) { return std::sin(x); });
}

}  // namespace

TEST_CASE("commutator vanishes for constant f") {
  const Grid g(64);
  std::mt19937_64 rng(3);
  const RealField one(g, std::vector<double>(64, 1.0));
  const RealField h = random_trig_polynomial(g, 16, rng);
  const auto t = verify_commutator(one, h, 2.0);
  CHECK(t.ratio <= 1e-12);
  CHECK(t.rhs > 0.0);
}

TEST_CASE("commutator of cos with itself by hand") {
  // f = g = cos x, s = 0: D = d/dx, so D(fg) - 2 f Df = 0 by the product rule.
  const Grid g(64);
  CHECK(verify_commutator(cosine(g), cosine(g), 1.6, 1.6).ratio > 0.0);
  const auto zero_s = verify_commutator(cosine(g), cosine(g), 0.0, 0.0);
  CHECK(zero_s.lhs <= 1e-13);
}

TEST_CASE("commutator of cos with itself is resolution independent") {
  const double coarse = verify_commutator(cosine(Grid(64)), cosine(Grid(64)), 2.0).ratio;
  const double fine = verify_commutator(cosine(Grid(128)), cosine(Grid(128)), 2.0).ratio;
  REQUIRE(std::isfinite(coarse));
  CHECK(coarse > 0.0);
  CHECK(std::abs(fine - coarse) <= 1e-10 * coarse);
}

TEST_CASE("commutator for cos: closed form") {
  // f = g = cos x: fg = (1 + cos 2x)/2, so D(fg) = -5^{s/2} sin 2x and
  // (Df) g = -2^{s/2} sin x cos x. Defect = (2^{s/2} - 5^{s/2}) sin 2x.
  const double s = 2.0, sigma = 1.6;
  const Grid g(64);
  const double pi = std::acos(-1.0);
  const double amp = std::abs(std::pow(5.0, s / 2) - std::pow(2.0, s / 2));
  const double lhs = amp * std::sqrt(pi);
  const double cs = std::sqrt(pi * std::pow(2.0, s));
  const double csig = std::sqrt(pi * std::pow(2.0, sigma));
  const auto t = verify_commutator(cosine(g), cosine(g), s, sigma);
  CHECK(t.lhs == doctest::Approx(lhs).epsilon(1e-12));
  CHECK(t.rhs == doctest::Approx(2.0 * cs * csig).epsilon(1e-12));
}

TEST_CASE("bilinear B vanishes at s = 0") {
  const Grid g(64);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    const RealField f = random_trig_polynomial(g, 16, rng);
    CHECK(verify_bilinear(f, f, 0.0, 0.0, BilinearVariant::B).ratio <= 1e-12);
  }
}

TEST_CASE("bilinear A is finite and resolution stable") {
  // f = sin, g = cos: (fg)_x = cos 2x is orthogonal to f, so the ratio is roundoff.
  const double tiny = verify_bilinear(sine(Grid(64)), cosine(Grid(64)), 2.0, 1.6, BilinearVariant::A).ratio;
  CHECK(tiny <= 1e-14);

  auto f = [](double x) { return std::sin(x) + 0.5 * std::cos(2.0 * x); };
  const double coarse =
      verify_bilinear(RealField::sample(Grid(64), f), cosine(Grid(64)), 2.0, 1.6, BilinearVariant::A).ratio;
  const double fine =
      verify_bilinear(RealField::sample(Grid(128), f), cosine(Grid(128)), 2.0, 1.6, BilinearVariant::A).ratio;
  REQUIRE(std::isfinite(coarse));
  CHECK(coarse > 1e-3);
  CHECK(std::abs(fine - coarse) <= 1e-10 * coarse);
}

TEST_CASE("inputs above the band limit are rejected") {
  const Grid g(32);
  const RealField f = RealField::sample(g, [](double x) { return std::cos(10.0 * x); });
  CHECK_THROWS_AS(verify_commutator(f, cosine(g), 2.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_commutator(cosine(g), cosine(g), 1.0, 1.6), std::invalid_argument);
}

TEST_CASE("zero inputs give ratio zero") {
  const Grid g(32);
  CHECK(verify_commutator(RealField(g), RealField(g), 2.0).ratio == 0.0);
  CHECK(verify_bilinear(RealField(g), cosine(g), 2.0, 1.6, BilinearVariant::A).ratio == 0.0);
}

TEST_CASE("random trig polynomials are reproducible and band-limited") {
  const Grid g(64);
  std::mt19937_64 a(5), b(5);
  const RealField f = random_trig_polynomial(g, 16, a);
  CHECK(f == random_trig_polynomial(g, 16, b));
  CHECK(forward(f).bandwidth(1e-14) <= 16);
  CHECK_THROWS_AS(random_trig_polynomial(g, 32, a), std::invalid_argument);
}

TEST_CASE("scans are finite and stable under grid doubling") {
  for (auto id : {InequalityId::Commutator, InequalityId::BilinearA, InequalityId::BilinearB}) {
    CAPTURE(to_string(id));
    InequalityScanConfig cfg;
    cfg.trials = 40;
    const auto rep = scan_inequality(id, cfg);
    CHECK(std::isfinite(rep.max_ratio));
    CHECK(rep.max_ratio > 0.0);
    CHECK(rep.ratio_stability < 0.05);
    CHECK(inequality_from_string(to_string(id)) == id);

    std::ostringstream os;
    write_inequality_csv(os, rep);
    CHECK(os.str().rfind("trials,max_ratio,ratio_stability\n40,", 0) == 0);
  }
  CHECK_THROWS_AS(inequality_from_string("banana"), std::invalid_argument);
}
