#include "opsplit/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "opsplit/snapshot.hpp"

namespace opsplit {

using namespace std::complex_literals;

Symbol::Symbol(std::string name, Eval eval, double growth_order,
               std::map<std::string, double> params)
    : name_(std::move(name)), eval_(std::move(eval)), p_(growth_order), params_(std::move(params)) {
  if (!eval_) throw std::invalid_argument("symbol '" + name_ + "': empty evaluator");
  if (!(growth_order >= 0.0)) throw std::invalid_argument("symbol '" + name_ + "': p must be >= 0");
}

std::string Symbol::label() const {
  if (params_.empty()) return name_;
  std::ostringstream os;
  os << name_ << '(';
  bool first = true;
  for (const auto& [k, v] : params_) {
    if (!first) os << ',';
    os << k << '=' << v;
    first = false;
  }
  os << ')';
  return os.str();
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "zero", "kdv", "bo", "burgers", "fractional", "whitham", "extended_whitham"};
  return names;
}

double tanhc(double xi) noexcept {
  const double a = std::abs(xi);
  if (a < 1e-8) return 1.0 - a * a / 3.0;
  return std::tanh(a) / a;
}

Symbol make_symbol(const std::string& name, const SymbolParams& params) {
  if (name == "zero") {
    return Symbol(name, [](double) { return std::complex<double>(0.0); }, 0.0);
  }
  if (name == "kdv") {
    return Symbol(name, [](double xi) { return -1i * (xi * xi * xi); }, 3.0);
  }
  if (name == "bo") {
    return Symbol(name, [](double xi) { return 1i * (xi * std::abs(xi)); }, 2.0);
  }
  if (name == "burgers") {
    return Symbol(name, [](double xi) { return std::complex<double>(-xi * xi, 0.0); }, 2.0);
  }
  if (name == "fractional") {
    const double a = params.a;
    if (!(a >= 1.0 && a <= 3.0)) {
      throw std::invalid_argument("fractional symbol: a must lie in [1, 3], got " +
                                  format_double(a));
    }
    // |xi|^(a-1) at xi = 0 is 0 for a > 1 and 1 for a = 1, which is what pow gives.
    return Symbol(
        name, [a](double xi) { return -1i * (xi * std::pow(std::abs(xi), a - 1.0)); }, a,
        {{"a", a}});
  }
  if (name == "whitham") {
    return Symbol(name, [](double xi) { return 1i * (xi * std::sqrt(tanhc(xi))); }, 0.5);
  }
  if (name == "extended_whitham") {
    const double beta = params.beta;
    if (!(beta > 0.0) || !std::isfinite(beta)) {
      throw std::invalid_argument("extended_whitham symbol: beta must be > 0, got " +
                                  format_double(beta));
    }
    return Symbol(
        name,
        [beta](double xi) {
          return 1i * (xi * std::sqrt(1.0 + beta * xi * xi) * std::sqrt(tanhc(xi)));
        },
        1.5, {{"beta", beta}});
  }
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown symbol '" + name + "' (expected one of: " + known + ")");
}

namespace {

std::complex<double> checked_eval(const Symbol& sym, double xi) {
  const auto k = sym(xi);
  if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) {
    throw std::invalid_argument("symbol '" + sym.name() + "' is not finite at xi = " +
                                format_double(xi));
  }
  return k;
}

}  // namespace

ConditionReport verify_conditions(const Symbol& sym, double ximax, std::size_t samples,
                                  double tolerance) {
  if (!(ximax > 0.0) || !std::isfinite(ximax)) {
    throw std::invalid_argument("verify_conditions: ximax must be positive");
  }
  if (samples < 16) throw std::invalid_argument("verify_conditions: need at least 16 samples");

  ConditionReport rep;
  rep.ximax = ximax;
  rep.samples = samples;
  rep.tolerance = tolerance;
  rep.dissipativity_ok = true;
  rep.symmetry_ok = true;

  const double p = sym.growth_order();
  const auto last = static_cast<double>(samples - 1);
  // xi_i = ximax (2i - (N-1)) / (N-1): exactly symmetric about 0.
  auto lattice = [&](std::size_t i) {
    return ximax * (2.0 * static_cast<double>(i) - last) / last;
  };

  std::vector<double> xs(samples), bracket_p(samples);
  std::vector<std::complex<double>> xk(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double xi = lattice(i);
    const auto k = checked_eval(sym, xi);
    const auto k_neg = checked_eval(sym, -xi);
    const double slack = tolerance * (1.0 + std::abs(k));
    if (k.real() > slack) rep.dissipativity_ok = false;
    if (std::abs(k_neg - std::conj(k)) > slack) rep.symmetry_ok = false;

    xs[i] = xi;
    bracket_p[i] = std::pow(1.0 + xi * xi, 0.5 * p);
    xk[i] = xi * k;
    rep.growth_constant = std::max(rep.growth_constant, std::abs(k) / bracket_p[i]);
  }

  // Pair sums land on the doubled lattice zeta_q = ximax * 2(q - (N-1)) / (N-1).
  std::vector<std::complex<double>> zk(2 * samples - 1);
  for (std::size_t q = 0; q < zk.size(); ++q) {
    const double zeta = ximax * 2.0 * (static_cast<double>(q) - last) / last;
    zk[q] = zeta * checked_eval(sym, zeta);
  }

  double cocycle = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t j = 0; j < samples; ++j) {
      const double denom = std::abs(xs[i]) * bracket_p[j] + std::abs(xs[j]) * bracket_p[i];
      if (denom == 0.0) continue;  // the (0, 0) pair
      const double num = std::abs(zk[i + j] - xk[j] - xk[i]);
      cocycle = std::max(cocycle, num / denom);
    }
  }
  rep.cocycle_constant = cocycle;
  return rep;
}

bool is_dissipative_on(const Symbol& sym, const std::vector<double>& xis) {
  return std::any_of(xis.begin(), xis.end(), [&](double xi) { return sym(xi).real() < 0.0; });
}

}  // namespace opsplit
