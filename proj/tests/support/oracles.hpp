#pragma once

// Test-only reference computations. Nothing here calls into the solver
// paths it is used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "opsplit/fields.hpp"

namespace opsplit::testing {

inline RealField sine_fixture(const Grid& g) {
  return RealField::sample(g, [](double x) { return 0.5 * std::sin(x); });
}

inline RealField two_mode_fixture(const Grid& g) {
  return RealField::sample(g, [](double x) { return 0.5 * std::sin(x) + 0.25 * std::cos(2.0 * x); });
}

inline double max_abs_diff(const RealField& a, const RealField& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

/// Inviscid Burgers by characteristics: u(x, t) solves u = u0(x - u t),
/// Newton-iterated pointwise. Valid before the first gradient blow-up.
inline RealField characteristics_solution(const Grid& g, const std::function<double(double)>& u0,
                                          const std::function<double(double)>& du0, double t) {
  std::vector<double> out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.x(j);
    double u = u0(x);
    for (int it = 0; it < 100; ++it) {
      const double xi = x - u * t;
      const double f = u - u0(xi);
      const double df = 1.0 + t * du0(xi);
      const double step = f / df;
      u -= step;
      if (std::abs(step) < 1e-16) break;
    }
    out[j] = u;
  }
  return RealField(g, std::move(out));
}

/// Direct O(n^2) DFT with the library's normalization, c_m = (1/n) sum u_j e^{-i xi_m x_j}.
inline std::vector<Complex> naive_dft(const RealField& u) {
  const Grid& g = u.grid();
  const std::size_t n = g.size();
  std::vector<Complex> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += u[j] * std::exp(Complex(0.0, -g.xi(k) * g.x(j)));
    }
    c[k] = acc / static_cast<double>(n);
  }
  return c;
}

/// Composite trapezoid (spectrally accurate for periodic integrands).
inline double periodic_integral(const std::function<double(double)>& f, double L, std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += f(L * static_cast<double>(j) / static_cast<double>(n));
  return acc * L / static_cast<double>(n);
}

}  // namespace opsplit::testing
