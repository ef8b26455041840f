#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "opsplit/fields.hpp"
#include "opsplit/grid.hpp"

namespace opsplit {

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

/// c_m = (1/n) sum_j u_j exp(-i xi_m x_j). The Nyquist coefficient is kept so
/// that inverse(forward(u)) reproduces arbitrary samples.
SpectralField forward(const RealField& u);

/// u_j = Re sum_m c_m exp(i xi_m x_j).
RealField inverse(const SpectralField& c);

/// Full complex synthesis, for measuring how far c is from a real field.
std::vector<Complex> inverse_complex(const SpectralField& c);

/// max_j |Im u_j| / max_m |c_m| of the complex synthesis (0 for c = 0).
double imaginary_residue(const SpectralField& c);

// ---------------------------------------------------------------------------
// Multipliers
// ---------------------------------------------------------------------------

/// c'_m = mult[j] c_m with the table in storage order. The Nyquist slot is
/// re-zeroed. Throws std::invalid_argument on a size mismatch or a
/// non-finite table entry.
SpectralField apply_multiplier(SpectralField f, std::span<const Complex> table);

/// Tabulates m(xi_j) over the lattice (Nyquist slot set to 0). Throws
/// std::invalid_argument if any other entry is non-finite.
template <class M>
  requires std::invocable<M&, double>
std::vector<Complex> multiplier_table(const Grid& grid, M&& m) {
  std::vector<Complex> table(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (j == grid.nyquist_slot()) continue;
    const Complex v = m(grid.xi(j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("multiplier is not finite at xi = " + std::to_string(grid.xi(j)));
    }
    table[j] = v;
  }
  return table;
}

template <class M>
  requires std::invocable<M&, double>
SpectralField apply_multiplier(SpectralField f, M&& m) {
  const auto table = multiplier_table(f.grid(), m);
  return apply_multiplier(std::move(f), std::span<const Complex>(table));
}

/// Japanese bracket (1 + xi^2)^(1/2).
inline double japanese(double xi) noexcept { return std::sqrt(1.0 + xi * xi); }

/// Spectral derivative (multiplier i xi).
SpectralField derivative(const SpectralField& f);
RealField derivative(const RealField& u);

// ---------------------------------------------------------------------------
// Sobolev norms
// ---------------------------------------------------------------------------

/// Weights <xi_m>^(2s) in storage order.
std::vector<double> sobolev_weights(const Grid& grid, double s);

/// ||u||_{H^s}^2 = L sum_m <xi_m>^(2s) |c_m|^2.
double sobolev_norm(const SpectralField& c, double s);
double sobolev_norm(const RealField& u, double s);
/// Same, with a precomputed weight table.
double sobolev_norm(const SpectralField& c, std::span<const double> weights);

/// Re <f, h>_{H^s} = L sum_m <xi_m>^(2s) Re(f_m conj(h_m)).
double sobolev_inner(const SpectralField& f, const SpectralField& h, double s);

/// Discrete L^2 norm from samples, sqrt((L/n) sum_j u_j^2).
double l2_norm_samples(const RealField& u);
/// Discrete mean integral (L/n) sum_j u_j.
double integral(const RealField& u);

// ---------------------------------------------------------------------------
// Dealiasing and resampling
// ---------------------------------------------------------------------------

/// 2/3 rule: zero every coefficient with |m| > n/3.
SpectralField dealias(SpectralField f);
RealField dealias(const RealField& u);

/// Re-expresses f on a grid of the same length but different size by zero
/// padding or truncation. Truncation drops |m| >= target.n/2.
SpectralField resample(const SpectralField& f, const Grid& target);
RealField resample(const RealField& u, const Grid& target);

}  // namespace opsplit
