#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opsplit/grid.hpp"

using opsplit::Grid;

TEST_CASE("lattice on (8, 2pi) is -4..3") {
  const Grid g(8);
  const double expected[] = {0, 1, 2, 3, -4, -3, -2, -1};  // storage order
  for (std::size_t j = 0; j < 8; ++j) CHECK(g.xi(j) == expected[j]);
  CHECK(g.mode(4) == -4);
  CHECK(g.nyquist_slot() == 4);
}

TEST_CASE("lattice spacing scales with 2pi/L") {
  const Grid g(8, 4.0 * std::numbers::pi);
  CHECK(g.wavenumber_spacing() == doctest::Approx(0.5));
  CHECK(g.xi(1) == doctest::Approx(0.5));
  CHECK(g.xi(7) == doctest::Approx(-0.5));
}

TEST_CASE("invalid grids are rejected") {
  CHECK_THROWS_AS(Grid(7), std::invalid_argument);
  CHECK_THROWS_AS(Grid(9), std::invalid_argument);
  CHECK_THROWS_AS(Grid(6), std::invalid_argument);
  CHECK_THROWS_AS(Grid(16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid(16, -1.0), std::invalid_argument);
}

TEST_CASE("abscissae are equispaced on [0, L)") {
  const Grid g(32, 3.0);
  const auto xs = g.xs();
  CHECK(xs.front() == 0.0);
  for (std::size_t j = 1; j < xs.size(); ++j) {
    CHECK(xs[j] > xs[j - 1]);
    CHECK(xs[j] - xs[j - 1] == doctest::Approx(3.0 / 32));
  }
  CHECK(xs.back() < 3.0);
}

TEST_CASE("slot and mode are inverse; lattice symmetric except Nyquist") {
  const Grid g(16);
  for (long m = -8; m < 8; ++m) CHECK(g.mode(g.slot(m)) == m);
  CHECK_THROWS_AS(g.slot(8), std::out_of_range);
  for (long m = 1; m < 8; ++m) CHECK(g.xi(g.slot(m)) == -g.xi(g.slot(-m)));
  CHECK(g.xi_max() == doctest::Approx(8.0));
}
