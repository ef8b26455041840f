#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include "opsplit/fields.hpp"

namespace opsplit {

/// Numerical checks of the Sobolev-space estimates behind the splitting
/// error analysis. Each check returns LHS / RHS for one pair of functions;
/// the scans report the largest ratio over random trials and how much it
/// moves when the grid is doubled.
///
/// All products are formed on a grid with twice the points, so for inputs
/// band-limited to |m| <= n/4 every quantity is computed without aliasing.

enum class InequalityId {
  Commutator,  ///< ||D(fg) - (Df)g - f(Dg)||_{L2} <= C(|f|_s |g|_sigma + |f|_sigma |g|_s), D = d/dx <d/dx>^s
  BilinearA,   ///< |<f, (fg)_x>_{H^s}| <= C |f|_s^2 |g|_{s+1}
  BilinearB,   ///< |<f, f f_x>_{H^s}| <= C |f|_s^2 |f|_sigma
};

std::string to_string(InequalityId id);
InequalityId inequality_from_string(const std::string& name);

struct InequalityTerms {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// Throws std::invalid_argument unless f and g are band-limited to n/4 and
/// s >= sigma; InequalitySetupError if RHS = 0 while LHS is not.
InequalityTerms verify_commutator(const RealField& f, const RealField& g, double s,
                                  double sigma = 1.6);

enum class BilinearVariant { A, B };

/// Variant B ignores g. sigma is only used by variant B.
InequalityTerms verify_bilinear(const RealField& f, const RealField& g, double s, double sigma,
                                BilinearVariant variant);

struct InequalityScanConfig {
  std::size_t n = 64;        ///< coarse grid; the scan repeats on 2n
  std::size_t trials = 200;
  double s = 2.0;
  double sigma = 1.6;
  std::uint64_t seed = 12345;
  double length = 6.283185307179586;
};

struct InequalityReport {
  InequalityId id = InequalityId::Commutator;
  std::size_t trials = 0;
  double max_ratio = 0.0;       ///< on the n grid
  double max_ratio_fine = 0.0;  ///< same trials on the 2n grid
  /// |max_ratio_fine - max_ratio| / max_ratio (0 if both vanish).
  double ratio_stability = 0.0;
};

/// Random real trigonometric polynomial with modes |m| <= band and
/// coefficients decaying like <m>^-3. Uniform variates are taken directly
/// from the engine bits, so the sequence is the same on every platform.
RealField random_trig_polynomial(const Grid& grid, long band, std::mt19937_64& rng);

InequalityReport scan_inequality(InequalityId id, const InequalityScanConfig& cfg = {});

/// `trials,max_ratio,ratio_stability`.
void write_inequality_csv(std::ostream& os, const InequalityReport& rep);

}  // namespace opsplit
