#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "opsplit/spectral.hpp"
#include "oracles.hpp"

using namespace opsplit;
using opsplit::testing::max_abs_diff;

namespace {

RealField random_field(const Grid& g, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<double> v(g.size());
  for (double& x : v) x = nd(rng);
  return RealField(g, std::move(v));
}

}  // namespace

TEST_CASE("forward transform of cos(x) puts 1/2 on m = +-1") {
  const Grid g(32);
  const auto c = forward(RealField::sample(g, [](double x) { return std::cos(x); }));
  for (long m = -16; m < 16; ++m) {
    const double expected = (m == 1 || m == -1) ? 0.5 : 0.0;
    CHECK(std::abs(c.at_mode(m) - Complex(expected)) < 1e-15);
  }
}

TEST_CASE("zero samples give zero coefficients") {
  const Grid g(16);
  const auto c = forward(RealField(g));
  CHECK(c.max_abs() == 0.0);
}

TEST_CASE("forward matches the naive DFT") {
  const Grid g(24, 5.0);
  std::mt19937_64 rng(7);
  const RealField u = random_field(g, rng);
  const auto c = forward(u);
  const auto ref = opsplit::testing::naive_dft(u);
  for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(c[j] - ref[j]) < 1e-13);
}

TEST_CASE("round trip reproduces random samples") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {8u, 64u, 256u, 1024u}) {
    const Grid g(n);
    for (int trial = 0; trial < 10; ++trial) {
      const RealField u = random_field(g, rng);
      const RealField back = inverse(forward(u));
      CHECK(max_abs_diff(u, back) <= 1e-12 * u.max_abs());
    }
  }
}

TEST_CASE("Parseval: H^0 norm equals the sample L2 norm") {
  std::mt19937_64 rng(2);
  for (double L : {2.0 * std::numbers::pi, 1.0, 17.5}) {
    const Grid g(128, L);
    const RealField u = random_field(g, rng);
    const double a = sobolev_norm(u, 0.0);
    const double b = l2_norm_samples(u);
    CHECK(std::abs(a - b) <= 1e-10 * b);
  }
}

TEST_CASE("apply_multiplier examples") {
  const Grid g(32);
  const RealField u = RealField::sample(g, [](double x) { return std::cos(x); });
  const auto c = forward(u);

  SUBCASE("identity") {
    const auto out = inverse(apply_multiplier(c, [](double) { return Complex(1.0); }));
    CHECK(max_abs_diff(out, u) < 1e-15);
  }
  SUBCASE("i xi gives the derivative") {
    const auto out = inverse(apply_multiplier(c, [](double xi) { return Complex(0.0, xi); }));
    const auto expected = RealField::sample(g, [](double x) { return -std::sin(x); });
    CHECK(max_abs_diff(out, expected) < 1e-14);
  }
  SUBCASE("<xi>^2 doubles cos(x)") {
    const auto out = inverse(apply_multiplier(c, [](double xi) { return Complex(1.0 + xi * xi); }));
    // roundoff in the top modes is amplified by up to 1 + (n/2)^2
    CHECK(max_abs_diff(out, 2.0 * u) < 1e-12);
  }
  SUBCASE("non-finite multiplier is rejected") {
    CHECK_THROWS_AS(apply_multiplier(c, [](double xi) { return Complex(1.0 / xi); }),
                    std::invalid_argument);
  }
}

TEST_CASE("apply_multiplier zeroes Nyquist and preserves Hermitian symmetry") {
  std::mt19937_64 rng(3);
  const Grid g(64);
  const auto c = forward(random_field(g, rng));
  CHECK(c.at_mode(-32) != Complex(0.0));
  const auto out = apply_multiplier(c, [](double xi) { return Complex(std::cos(xi), xi * xi * xi); });
  CHECK(out.at_mode(-32) == Complex(0.0));
  CHECK(out.hermitian_residue() < 1e-14);
  CHECK(imaginary_residue(out) <= 1e-12);
}

TEST_CASE("sobolev_norm examples") {
  const Grid g(32);
  CHECK(sobolev_norm(RealField(g), 3.0) == 0.0);
  const RealField u = RealField::sample(g, [](double x) { return std::cos(x); });
  CHECK(sobolev_norm(u, 0.0) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(sobolev_norm(u, 1.0) == doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("sobolev_norm is nondecreasing in s") {
  std::mt19937_64 rng(4);
  const Grid g(64);
  const auto c = forward(random_field(g, rng));
  double prev = 0.0;
  for (double s = 0.0; s <= 4.0; s += 0.25) {
    const double v = sobolev_norm(c, s);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("sobolev_norm of a band-limited trig polynomial is grid independent") {
  auto f = [](double x) { return 0.3 + std::sin(x) - 0.7 * std::cos(3.0 * x) + 0.1 * std::sin(5.0 * x); };
  for (double s : {0.0, 1.0, 2.5}) {
    const double coarse = sobolev_norm(RealField::sample(Grid(16), f), s);
    const double fine = sobolev_norm(RealField::sample(Grid(32), f), s);
    CHECK(std::abs(coarse - fine) <= 1e-13 * fine);
  }
}

TEST_CASE("dealias applies the 2/3 rule and is idempotent") {
  const Grid g(32);
  SpectralField c(g);
  c.at_mode(12) = 1.0;
  c.at_mode(-12) = 1.0;
  c.at_mode(10) = Complex(0.5, 0.25);
  c.at_mode(-10) = Complex(0.5, -0.25);
  const auto d = dealias(c);
  CHECK(d.at_mode(12) == Complex(0.0));
  CHECK(d.at_mode(-12) == Complex(0.0));
  CHECK(d.at_mode(10) == c.at_mode(10));
  CHECK(dealias(d) == d);

  SpectralField band(g);
  band.at_mode(3) = 1.0;
  band.at_mode(-3) = 1.0;
  CHECK(dealias(band) == band);
}

TEST_CASE("resample pads and truncates exactly") {
  auto f = [](double x) { return std::sin(2.0 * x) + 0.5 * std::cos(5.0 * x); };
  const RealField coarse = RealField::sample(Grid(16), f);
  const RealField fine = resample(coarse, Grid(64));
  CHECK(max_abs_diff(fine, RealField::sample(Grid(64), f)) < 1e-14);
  CHECK(max_abs_diff(resample(fine, Grid(16)), coarse) < 1e-14);
}

TEST_CASE("derivative of a RealField") {
  const Grid g(64, 4.0);
  const double k = 2.0 * std::numbers::pi / 4.0;
  const auto u = RealField::sample(g, [&](double x) { return std::sin(3.0 * k * x); });
  const auto du = derivative(u);
  const auto expected = RealField::sample(g, [&](double x) { return 3.0 * k * std::cos(3.0 * k * x); });
  CHECK(max_abs_diff(du, expected) < 1e-12);
}

TEST_CASE("field arithmetic checks grids") {
  RealField a(Grid(16)), b(Grid(32));
  CHECK_THROWS_AS(a += b, std::invalid_argument);
  CHECK_THROWS_AS(RealField(Grid(16), std::vector<double>(15)), std::invalid_argument);
  CHECK_THROWS_AS(RealField(Grid(8), std::vector<double>(8, std::nan(""))), std::invalid_argument);
}
