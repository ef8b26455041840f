#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace opsplit {

/// Fourier multiplier k(xi) of the linear operator K, with its declared
/// growth order p (|k(xi)| <~ <xi>^p). Immutable once built.
class Symbol {
public:
  using Eval = std::function<std::complex<double>(double)>;

  Symbol(std::string name, Eval eval, double growth_order,
         std::map<std::string, double> params = {});

  const std::string& name() const noexcept { return name_; }
  double growth_order() const noexcept { return p_; }
  const std::map<std::string, double>& params() const noexcept { return params_; }

  std::complex<double> operator()(double xi) const { return eval_(xi); }

  /// Name with parameters, e.g. "extended_whitham(beta=1)".
  std::string label() const;

private:
  std::string name_;
  Eval eval_;
  double p_;
  std::map<std::string, double> params_;
};

struct SymbolParams {
  /// Surface tension for extended_whitham; must be > 0.
  double beta = 1.0;
  /// Exponent for fractional, k = -i xi |xi|^(a-1); must lie in [1, 3].
  double a = 2.0;
};

/// Catalog names accepted by make_symbol.
const std::vector<std::string>& catalog_names();

/// Catalog entries:
///   zero              k = 0                                      p = 0
///   kdv               k = -i xi^3                                p = 3
///   bo                k = i xi |xi|                              p = 2
///   burgers           k = -xi^2                                  p = 2
///   fractional(a)     k = -i xi |xi|^(a-1)                       p = a
///   whitham           k = i xi (tanh xi / xi)^(1/2)              p = 1/2
///   extended_whitham  k = i xi (1 + beta xi^2)^(1/2) (tanh xi / xi)^(1/2)   p = 3/2
/// Throws std::invalid_argument for unknown names or invalid parameters.
Symbol make_symbol(const std::string& name, const SymbolParams& params = {});

/// tanh(xi)/xi with the removable singularity filled in.
double tanhc(double xi) noexcept;

struct ConditionReport {
  bool dissipativity_ok = false;  ///< Re k <= 0 on the scanned lattice
  bool symmetry_ok = false;       ///< k(-xi) = conj(k(xi))
  double growth_constant = 0.0;   ///< max |k| / <xi>^p
  double cocycle_constant = 0.0;  ///< max |(x+y)k(x+y) - y k(y) - x k(x)| / (|x|<y>^p + |y|<x>^p)
  double ximax = 0.0;
  std::size_t samples = 0;
  double tolerance = 0.0;

  bool passed() const noexcept { return dissipativity_ok && symmetry_ok; }
};

/// Scans xi on a uniform lattice of `samples` points in [-ximax, ximax] for
/// the dissipativity and symmetry conditions, and all lattice pairs for the
/// cocycle bound. Violations are judged with relative slack
/// tolerance * (1 + |k|). Throws std::invalid_argument for ximax <= 0,
/// samples < 16, or a non-finite symbol value on the lattice.
ConditionReport verify_conditions(const Symbol& sym, double ximax, std::size_t samples,
                                  double tolerance = 1e-12);

/// True if Re k(xi) < 0 anywhere on the given wavenumbers.
bool is_dissipative_on(const Symbol& sym, const std::vector<double>& xis);

}  // namespace opsplit
