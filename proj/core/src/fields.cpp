#include "opsplit/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace opsplit {

namespace {

void require_same_grid(const Grid& a, const Grid& b, const char* op) {
  if (!(a == b)) throw std::invalid_argument(std::string(op) + ": grid mismatch");
}

}  // namespace

RealField::RealField(Grid grid) : grid_(grid), samples_(grid.size(), 0.0) {}

RealField::RealField(Grid grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw std::invalid_argument("RealField: expected " + std::to_string(grid_.size()) +
                                " samples, got " + std::to_string(samples_.size()));
  }
  if (!all_finite()) throw std::invalid_argument("RealField: non-finite sample");
}

double RealField::max_abs() const noexcept {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::abs(v));
  return m;
}

bool RealField::all_finite() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); });
}

RealField& RealField::operator+=(const RealField& other) {
  require_same_grid(grid_, other.grid_, "RealField +=");
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] += other.samples_[j];
  return *this;
}

RealField& RealField::operator-=(const RealField& other) {
  require_same_grid(grid_, other.grid_, "RealField -=");
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] -= other.samples_[j];
  return *this;
}

RealField& RealField::operator*=(double a) noexcept {
  for (double& v : samples_) v *= a;
  return *this;
}

RealField operator*(const RealField& a, const RealField& b) {
  require_same_grid(a.grid_, b.grid_, "RealField *");
  RealField out(a);
  for (std::size_t j = 0; j < out.samples_.size(); ++j) out.samples_[j] *= b.samples_[j];
  return out;
}

SpectralField::SpectralField(Grid grid) : grid_(grid), coeffs_(grid.size()) {}

SpectralField::SpectralField(Grid grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_.size()) {
    throw std::invalid_argument("SpectralField: expected " + std::to_string(grid_.size()) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

double SpectralField::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

long SpectralField::bandwidth(double tol) const noexcept {
  long band = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (std::abs(coeffs_[j]) > tol) band = std::max(band, std::abs(grid_.mode(j)));
  }
  return band;
}

double SpectralField::hermitian_residue() const noexcept {
  const double scale = max_abs();
  if (scale == 0.0) return 0.0;
  const std::size_t n = coeffs_.size();
  double worst = std::abs(coeffs_[0].imag());
  // The Nyquist coefficient is its own partner; for real data it is real.
  worst = std::max(worst, std::abs(coeffs_[n / 2].imag()));
  for (std::size_t j = 1; j < n / 2; ++j) {
    worst = std::max(worst, std::abs(coeffs_[n - j] - std::conj(coeffs_[j])));
  }
  return worst / scale;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField +=");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField -=");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

SpectralField& SpectralField::operator*=(Complex a) noexcept {
  for (Complex& c : coeffs_) c *= a;
  return *this;
}

}  // namespace opsplit
