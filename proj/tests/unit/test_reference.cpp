#include "doctest.h"

#include <cmath>

#include "opsplit/analysis.hpp"
#include "opsplit/errors.hpp"
#include "opsplit/reference.hpp"
#include "opsplit/spectral.hpp"
#include "oracles.hpp"

using namespace opsplit;
using opsplit::testing::max_abs_diff;

TEST_CASE("linear reference is the exact multiplier flow") {
  const Grid g(64);
  const RealField u = RealField::sample(g, [](double x) { return std::cos(x); });
  const auto v = reference_solve(u, make_symbol("kdv"), 1.0, 1e-2, false);
  CHECK(max_abs_diff(v, RealField::sample(g, [](double x) { return std::cos(x - 1.0); })) <= 1e-12);

  const RealField w = opsplit::testing::two_mode_fixture(Grid(128));
  for (const std::string name : {"kdv", "bo", "burgers", "extended_whitham"}) {
    CAPTURE(name);
    const Symbol sym = make_symbol(name);
    const auto ref = reference_solve(w, sym, 0.9, 0.03, false);
    CHECK(max_abs_diff(ref, linear_step(w, sym, 0.9)) <= 1e-12);
  }
}

TEST_CASE("constants are fixed points") {
  const Grid g(64);
  const RealField c(g, std::vector<double>(64, 0.4));
  for (const auto& name : catalog_names()) {
    CHECK(max_abs_diff(reference_solve(c, make_symbol(name), 1.0, 0.01), c) < 1e-14);
  }
}

TEST_CASE("halving dt_ref barely moves the KdV solution") {
  const Grid g(256);
  const RealField u = opsplit::testing::sine_fixture(g);
  const Symbol kdv = make_symbol("kdv");
  const auto a = reference_solve(u, kdv, 1.0, 1e-3);
  const auto b = reference_solve(u, kdv, 1.0, 5e-4);
  CHECK(sobolev_norm(a - b, 0.0) <= 1e-10);
}

TEST_CASE("dispersive reference conserves L2 and mean") {
  const Grid g(256);
  const RealField u = opsplit::testing::two_mode_fixture(g);
  const double l2 = sobolev_norm(u, 0.0);
  for (const std::string name : {"kdv", "bo"}) {
    const auto v = reference_solve(u, make_symbol(name), 1.0, 1e-3);
    CHECK(std::abs(sobolev_norm(v, 0.0) - l2) <= 1e-9 * l2);
    CHECK(std::abs(integral(v) - integral(u)) <= 1e-13);
    CHECK(imaginary_residue(forward(v)) <= 1e-12);
  }
}

TEST_CASE("self-convergence is fourth order") {
  // Large KdV phases k h make the coarsest steps pre-asymptotic; the sweep
  // starts where the error constant has settled.
  const Grid g(128);
  const RealField u = opsplit::testing::two_mode_fixture(g);
  const Symbol sym = make_symbol("kdv");
  std::vector<double> hs, diffs;
  for (double h = 0.00625; h > 0.0007; h /= 2) {
    const auto coarse = reference_solve(u, sym, 1.0, h);
    const auto fine = reference_solve(u, sym, 1.0, h / 4);
    hs.push_back(h);
    diffs.push_back(sobolev_norm(coarse - fine, 0.0));
  }
  const auto fit = fit_loglog(hs, diffs);
  CHECK(fit.slope == doctest::Approx(4.0).epsilon(0.075));
  CHECK(fit.r2 >= 0.999);
}

TEST_CASE("the solver object advances in whole steps") {
  const Grid g(64);
  const RealField u = opsplit::testing::two_mode_fixture(g);
  ReferenceSolver solver(u, make_symbol("bo"), 0.01);
  solver.advance(10);
  CHECK(solver.steps_taken() == 10);
  CHECK(solver.time() == doctest::Approx(0.1));
  CHECK(solver.state() == reference_solve(u, make_symbol("bo"), 0.1, 0.01));

  const auto snaps = reference_snapshots(u, make_symbol("bo"), 0.05, 2, 5);
  REQUIRE(snaps.size() == 3);
  CHECK(snaps[0] == u);
  CHECK(snaps[2] == solver.state());
}

TEST_CASE("blow-up and invalid arguments") {
  const Grid g(128);
  const RealField u = RealField::sample(g, [](double x) { return std::sin(x); });
  CHECK_THROWS_AS(reference_solve(u, make_symbol("zero"), 2.0, 0.01), BlowupDetected);
  CHECK_THROWS_AS(reference_solve(u, make_symbol("kdv"), 0.01, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(reference_solve(u, make_symbol("kdv"), 1.0, 0.0), std::invalid_argument);
}
