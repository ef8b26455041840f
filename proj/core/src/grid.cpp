#include "opsplit/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace opsplit {

Grid::Grid(std::size_t n, double length) : n_(n), length_(length) {
  if (n < kMinPoints) {
    throw std::invalid_argument("grid: n must be at least " + std::to_string(kMinPoints) +
                                ", got " + std::to_string(n));
  }
  if (n % 2 != 0) {
    throw std::invalid_argument("grid: n must be even, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("grid: L must be positive and finite");
  }
}

double Grid::wavenumber_spacing() const noexcept { return 2.0 * std::numbers::pi / length_; }

std::vector<double> Grid::xs() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = x(j);
  return out;
}

long Grid::mode(std::size_t j) const noexcept {
  const auto half = static_cast<long>(n_ / 2);
  const auto jj = static_cast<long>(j);
  return jj < half ? jj : jj - static_cast<long>(n_);
}

std::size_t Grid::slot(long m) const {
  const auto half = static_cast<long>(n_ / 2);
  if (m < -half || m >= half) {
    throw std::out_of_range("grid: wavenumber index " + std::to_string(m) + " outside lattice");
  }
  return static_cast<std::size_t>(m >= 0 ? m : m + static_cast<long>(n_));
}

double Grid::xi(std::size_t j) const noexcept {
  return wavenumber_spacing() * static_cast<double>(mode(j));
}

std::vector<double> Grid::xis() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = xi(j);
  return out;
}

double Grid::xi_max() const noexcept {
  return wavenumber_spacing() * static_cast<double>(n_ / 2);
}

}  // namespace opsplit
