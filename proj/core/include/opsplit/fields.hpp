#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "opsplit/grid.hpp"

namespace opsplit {

using Complex = std::complex<double>;

/// Physical-space samples u(x_j) on a grid.
class RealField {
public:
  /// Zero field.
  explicit RealField(Grid grid);
  /// Throws std::invalid_argument on size mismatch or non-finite samples.
  RealField(Grid grid, std::vector<double> samples);

  /// Samples f(x_j).
  template <class F>
  static RealField sample(const Grid& grid, F&& f) {
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(grid.x(j));
    return RealField(grid, std::move(v));
  }

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }
  std::span<double> samples() noexcept { return samples_; }
  double operator[](std::size_t j) const noexcept { return samples_[j]; }
  double& operator[](std::size_t j) noexcept { return samples_[j]; }

  double max_abs() const noexcept;
  bool all_finite() const noexcept;

  RealField& operator+=(const RealField& other);
  RealField& operator-=(const RealField& other);
  RealField& operator*=(double a) noexcept;

  friend RealField operator+(RealField a, const RealField& b) { return a += b; }
  friend RealField operator-(RealField a, const RealField& b) { return a -= b; }
  friend RealField operator*(double a, RealField b) { return b *= a; }
  /// Pointwise product.
  friend RealField operator*(const RealField& a, const RealField& b);

  friend bool operator==(const RealField&, const RealField&) = default;

private:
  Grid grid_;
  std::vector<double> samples_;
};

/// Fourier coefficients c_m in the grid's storage order.
///
/// The transform normalization is c_m = (1/n) sum_j u(x_j) exp(-i xi_m x_j),
/// so trigonometric polynomials have their true coefficients.
class SpectralField {
public:
  explicit SpectralField(Grid grid);
  SpectralField(Grid grid, std::vector<Complex> coeffs);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  std::span<Complex> coeffs() noexcept { return coeffs_; }
  Complex operator[](std::size_t j) const noexcept { return coeffs_[j]; }
  Complex& operator[](std::size_t j) noexcept { return coeffs_[j]; }

  /// Coefficient for integer wavenumber index m.
  Complex at_mode(long m) const { return coeffs_[grid_.slot(m)]; }
  Complex& at_mode(long m) { return coeffs_[grid_.slot(m)]; }

  double max_abs() const noexcept;
  /// Largest |m| carrying a coefficient with modulus above tol.
  long bandwidth(double tol = 0.0) const noexcept;
  /// max_m |c_{-m} - conj(c_m)| over paired indices plus |Im c_0|,
  /// relative to max |c| (0 for the zero field).
  double hermitian_residue() const noexcept;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(Complex a) noexcept;

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(Complex a, SpectralField b) { return b *= a; }

  friend bool operator==(const SpectralField&, const SpectralField&) = default;

private:
  Grid grid_;
  std::vector<Complex> coeffs_;
};

}  // namespace opsplit
