#include "opsplit/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace opsplit {

namespace {

// The FFTW planner is not thread-safe; plan execution is. Each thread keeps
// its own plans and buffers, and creation/destruction go through this lock.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftPlan {
public:
  explicit FftPlan(std::size_t n) : n_(n) {
    std::lock_guard lock(planner_mutex());
    in_ = fftw_alloc_complex(n);
    out_ = fftw_alloc_complex(n);
    // FFTW_ESTIMATE keeps the chosen algorithm, and so the rounding,
    // identical from run to run.
    const int ni = static_cast<int>(n);
    fwd_ = fftw_plan_dft_1d(ni, in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(ni, in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(in_);
    fftw_free(out_);
  }

  std::span<Complex> input() { return {reinterpret_cast<Complex*>(in_), n_}; }
  std::span<const Complex> output() const { return {reinterpret_cast<const Complex*>(out_), n_}; }
  void run_forward() { fftw_execute(fwd_); }
  void run_backward() { fftw_execute(bwd_); }

private:
  std::size_t n_;
  fftw_complex* in_ = nullptr;
  fftw_complex* out_ = nullptr;
  fftw_plan fwd_ = nullptr;
  fftw_plan bwd_ = nullptr;
};

FftPlan& plan_for(std::size_t n) {
  thread_local std::map<std::size_t, std::unique_ptr<FftPlan>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<FftPlan>(n);
  return *slot;
}

void require_same_grid(const Grid& a, const Grid& b, const char* op) {
  if (!(a == b)) throw std::invalid_argument(std::string(op) + ": grid mismatch");
}

}  // namespace

SpectralField forward(const RealField& u) {
  const std::size_t n = u.size();
  auto& plan = plan_for(n);
  auto in = plan.input();
  for (std::size_t j = 0; j < n; ++j) in[j] = Complex(u[j], 0.0);
  plan.run_forward();
  const auto out = plan.output();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<Complex> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = out[j] * inv_n;
  return SpectralField(u.grid(), std::move(c));
}

std::vector<Complex> inverse_complex(const SpectralField& c) {
  const std::size_t n = c.size();
  auto& plan = plan_for(n);
  auto in = plan.input();
  std::copy(c.coeffs().begin(), c.coeffs().end(), in.begin());
  plan.run_backward();
  const auto out = plan.output();
  return {out.begin(), out.end()};
}

RealField inverse(const SpectralField& c) {
  const auto z = inverse_complex(c);
  std::vector<double> u(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) u[j] = z[j].real();
  return RealField(c.grid(), std::move(u));
}

double imaginary_residue(const SpectralField& c) {
  const double scale = c.max_abs();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (const Complex& z : inverse_complex(c)) worst = std::max(worst, std::abs(z.imag()));
  return worst / scale;
}

SpectralField apply_multiplier(SpectralField f, std::span<const Complex> table) {
  if (table.size() != f.size()) throw std::invalid_argument("apply_multiplier: table size mismatch");
  const std::size_t nyq = f.grid().nyquist_slot();
  auto c = f.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == nyq) {
      c[j] = 0.0;
      continue;
    }
    const Complex m = table[j];
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
      throw std::invalid_argument("apply_multiplier: non-finite multiplier at xi = " +
                                  std::to_string(f.grid().xi(j)));
    }
    c[j] *= m;
  }
  return f;
}

SpectralField derivative(const SpectralField& f) {
  SpectralField out(f);
  const Grid& g = f.grid();
  auto c = out.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= Complex(0.0, g.xi(j));
  c[g.nyquist_slot()] = 0.0;
  return out;
}

RealField derivative(const RealField& u) { return inverse(derivative(forward(u))); }

std::vector<double> sobolev_weights(const Grid& grid, double s) {
  std::vector<double> w(grid.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double xi = grid.xi(j);
    w[j] = std::pow(1.0 + xi * xi, s);
  }
  return w;
}

double sobolev_norm(const SpectralField& c, std::span<const double> weights) {
  if (weights.size() != c.size()) throw std::invalid_argument("sobolev_norm: weight size mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) acc += weights[j] * std::norm(c[j]);
  return std::sqrt(c.grid().length() * acc);
}

double sobolev_norm(const SpectralField& c, double s) {
  const auto w = sobolev_weights(c.grid(), s);
  return sobolev_norm(c, std::span<const double>(w));
}

double sobolev_norm(const RealField& u, double s) { return sobolev_norm(forward(u), s); }

double sobolev_inner(const SpectralField& f, const SpectralField& h, double s) {
  require_same_grid(f.grid(), h.grid(), "sobolev_inner");
  const auto w = sobolev_weights(f.grid(), s);
  double acc = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) acc += w[j] * (f[j] * std::conj(h[j])).real();
  return f.grid().length() * acc;
}

double l2_norm_samples(const RealField& u) {
  double acc = 0.0;
  for (double v : u.samples()) acc += v * v;
  return std::sqrt(u.grid().spacing() * acc);
}

double integral(const RealField& u) {
  const auto s = u.samples();
  return u.grid().spacing() * std::accumulate(s.begin(), s.end(), 0.0);
}

SpectralField dealias(SpectralField f) {
  const Grid& g = f.grid();
  const auto n = static_cast<long>(g.size());
  auto c = f.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (3 * std::abs(g.mode(j)) > n) c[j] = 0.0;
  }
  return f;
}

RealField dealias(const RealField& u) { return inverse(dealias(forward(u))); }

SpectralField resample(const SpectralField& f, const Grid& target) {
  if (target.length() != f.grid().length()) {
    throw std::invalid_argument("resample: grids must share the domain length");
  }
  SpectralField out(target);
  const auto src_half = static_cast<long>(f.size() / 2);
  const auto dst_half = static_cast<long>(target.size() / 2);
  for (long m = -src_half; m < src_half; ++m) {
    const Complex c = f.at_mode(m);
    if (m == -src_half && dst_half > src_half) {
      // The source Nyquist mode is a cosine; split it across +-m on the finer lattice.
      out.at_mode(m) += 0.5 * c;
      out.at_mode(-m) += 0.5 * c;
      continue;
    }
    if (m <= -dst_half || m >= dst_half) continue;
    out.at_mode(m) = c;
  }
  return out;
}

RealField resample(const RealField& u, const Grid& target) {
  return inverse(resample(forward(u), target));
}

}  // namespace opsplit
