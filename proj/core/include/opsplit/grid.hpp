#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace opsplit {

/// Uniform periodic grid on [0, L) with n samples.
///
/// Spectral data is stored in FFT order: storage index j holds wavenumber
/// index m = j for j < n/2 and m = j - n otherwise, so j = n/2 is the
/// Nyquist index m = -n/2. The grid is a cheap value type (two numbers);
/// abscissae and wavenumbers are computed on demand.
class Grid {
public:
  static constexpr std::size_t kMinPoints = 8;

  /// Throws std::invalid_argument for odd n, n < 8, or nonpositive L.
  Grid(std::size_t n, double length = 2.0 * std::numbers::pi);

  std::size_t size() const noexcept { return n_; }
  double length() const noexcept { return length_; }
  double spacing() const noexcept { return length_ / static_cast<double>(n_); }
  /// 2 pi / L, the lattice spacing in xi.
  double wavenumber_spacing() const noexcept;

  double x(std::size_t j) const noexcept { return spacing() * static_cast<double>(j); }
  std::vector<double> xs() const;

  /// Integer wavenumber index m for storage slot j.
  long mode(std::size_t j) const noexcept;
  /// Storage slot for integer wavenumber index m in [-n/2, n/2).
  std::size_t slot(long m) const;
  /// xi_m = 2 pi m / L for storage slot j.
  double xi(std::size_t j) const noexcept;
  /// Wavenumbers in storage order.
  std::vector<double> xis() const;
  /// Largest |xi| on the lattice, attained at the Nyquist index.
  double xi_max() const noexcept;

  std::size_t nyquist_slot() const noexcept { return n_ / 2; }

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  std::size_t n_;
  double length_;
};

}  // namespace opsplit
