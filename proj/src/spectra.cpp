// Copyright 2026 The specfac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specfac/spectra.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace specfac {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// FFTW plan creation is not thread safe; execution of a plan is.
std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

// In-place DFT, sign = FFTW_FORWARD (-1): sum_k a_k e^{-2pi i jk/M},
// sign = FFTW_BACKWARD (+1): sum_j a_j e^{+2pi i jk/M}. Unnormalized.
void dft(std::vector<cplx>& a, int sign) {
  const int n = static_cast<int>(a.size());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                            reinterpret_cast<fftw_complex*>(a.data()), sign,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace

FrequencyGrid::FrequencyGrid(std::size_t size) : size_(size) {
  if (!is_power_of_two(size) || size < 8) {
    throw std::invalid_argument(
        "FrequencyGrid: size must be a power of two >= 8");
  }
}

double FrequencyGrid::node(std::size_t j) const {
  return -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(size_);
}

double FrequencyGrid::spacing() const {
  return 2.0 * kPi / static_cast<double>(size_);
}

BoundaryFunction::BoundaryFunction(FrequencyGrid g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw std::invalid_argument(
        "BoundaryFunction: value count must equal grid size");
  }
}

BoundaryFunction BoundaryFunction::sample(
    const FrequencyGrid& grid, const std::function<cplx(double)>& f) {
  std::vector<cplx> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) v[j] = f(grid.node(j));
  return BoundaryFunction(grid, std::move(v));
}

BoundaryFunction BoundaryFunction::sample_real(
    const FrequencyGrid& grid, const std::function<double(double)>& f) {
  std::vector<cplx> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) v[j] = cplx(f(grid.node(j)));
  return BoundaryFunction(grid, std::move(v));
}

double BoundaryFunction::max_imag() const {
  double m = 0.0;
  for (const cplx& v : values) m = std::max(m, std::abs(v.imag()));
  return m;
}

HarmonicSeries::HarmonicSeries(int half_width)
    : half_width_(half_width), coeffs_(2 * half_width + 1, cplx(0.0)) {
  if (half_width < 0) {
    throw std::invalid_argument("HarmonicSeries: half width must be >= 0");
  }
}

cplx HarmonicSeries::coeff(int k) const {
  if (k < -half_width_ || k > half_width_) return cplx(0.0);
  return coeffs_[static_cast<std::size_t>(k + half_width_)];
}

void HarmonicSeries::set_coeff(int k, cplx v) {
  if (k < -half_width_ || k > half_width_) {
    throw std::out_of_range("HarmonicSeries: index outside [-K, K]");
  }
  coeffs_[static_cast<std::size_t>(k + half_width_)] = v;
}

double HarmonicSeries::energy() const {
  double e = 0.0;
  for (const cplx& c : coeffs_) e += std::norm(c);
  return e;
}

double HarmonicSeries::anticausal_energy() const {
  double e = 0.0;
  for (int k = -half_width_; k < 0; ++k) e += std::norm(coeff(k));
  return e;
}

CausalSeries::CausalSeries(std::vector<cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, cplx(0.0));
}

cplx CausalSeries::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return cplx(0.0);
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx CausalSeries::eval(cplx z) const {
  cplx acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

double CausalSeries::energy() const {
  double e = 0.0;
  for (const cplx& c : coeffs_) e += std::norm(c);
  return e;
}

CausalSeries CausalSeries::truncated(int degree) const {
  if (degree < 0) throw std::invalid_argument("truncated: degree must be >= 0");
  std::vector<cplx> c(coeffs_.begin(),
                      coeffs_.begin() +
                          std::min<std::size_t>(coeffs_.size(),
                                                static_cast<std::size_t>(degree) + 1));
  return CausalSeries(std::move(c));
}

CausalSeries CausalSeries::scaled_radially(double r) const {
  std::vector<cplx> c(coeffs_);
  double rk = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= rk;
    rk *= r;
  }
  return CausalSeries(std::move(c));
}

HarmonicSeries analyze(const BoundaryFunction& f, int half_width) {
  const int m = static_cast<int>(f.grid.size());
  if (half_width > m / 2 - 1) {
    throw std::invalid_argument(
        "analyze: half width exceeds M/2 - 1, coefficients would alias");
  }
  std::vector<cplx> a(f.values);
  dft(a, FFTW_BACKWARD);  // X[k] = sum_j v_j e^{+2pi i jk/M}
  HarmonicSeries s(half_width);
  for (int k = -half_width; k <= half_width; ++k) {
    const int idx = ((k % m) + m) % m;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // e^{-i k pi}
    s.set_coeff(k, sign * a[static_cast<std::size_t>(idx)] /
                       static_cast<double>(m));
  }
  return s;
}

BoundaryFunction synthesize(const HarmonicSeries& s, const FrequencyGrid& grid) {
  const int m = static_cast<int>(grid.size());
  if (m < 2 * s.half_width() + 2) {
    throw std::invalid_argument(
        "synthesize: grid size must be at least 2K+2 to avoid aliasing");
  }
  std::vector<cplx> a(static_cast<std::size_t>(m), cplx(0.0));
  for (int k = -s.half_width(); k <= s.half_width(); ++k) {
    const int idx = ((k % m) + m) % m;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    a[static_cast<std::size_t>(idx)] += sign * s.coeff(k);
  }
  dft(a, FFTW_FORWARD);  // v_j = sum_k a_k e^{-2pi i jk/M}
  return BoundaryFunction(grid, std::move(a));
}

BoundaryFunction synthesize(const CausalSeries& s, const FrequencyGrid& grid) {
  return synthesize(embed(s, s.degree()), grid);
}

CausalSeries positive_part(const HarmonicSeries& s) {
  std::vector<cplx> c(static_cast<std::size_t>(s.half_width()) + 1);
  for (int k = 0; k <= s.half_width(); ++k) {
    c[static_cast<std::size_t>(k)] = s.coeff(k);
  }
  // Drop a trailing run of zeros but keep at least the constant term.
  while (c.size() > 1 && c.back() == cplx(0.0)) c.pop_back();
  return CausalSeries(std::move(c));
}

HarmonicSeries embed(const CausalSeries& s, int half_width) {
  if (half_width < s.degree()) {
    throw std::invalid_argument("embed: half width smaller than series degree");
  }
  HarmonicSeries out(half_width);
  for (int k = 0; k <= s.degree(); ++k) out.set_coeff(k, s.coeff(k));
  return out;
}

cplx cauchy_positive_radial(const BoundaryFunction& f, double r, double theta) {
  if (r < 0.0 || r >= 1.0) {
    throw std::domain_error("cauchy_positive_radial: requires 0 <= r < 1");
  }
  const cplx z = std::polar(r, -theta);
  cplx acc(0.0);
  for (std::size_t j = 0; j < f.grid.size(); ++j) {
    const cplx w = std::polar(1.0, f.grid.node(j));
    acc += f.values[j] / (1.0 - z * w);
  }
  return acc / static_cast<double>(f.grid.size());
}

double sup_distance(const BoundaryFunction& f, const BoundaryFunction& g) {
  if (!(f.grid == g.grid)) {
    throw std::invalid_argument("sup_distance: grid mismatch");
  }
  double m = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    m = std::max(m, std::abs(f.values[j] - g.values[j]));
  }
  return m;
}

double sup_norm(const BoundaryFunction& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// Max circular increments over dyadic lags s = 1, 2, ..., M/2 samples.
void dyadic_increments(const BoundaryFunction& f, std::vector<double>& lags,
                       std::vector<double>& incs) {
  const std::size_t m = f.grid.size();
  lags.clear();
  incs.clear();
  for (std::size_t s = 1; s <= m / 2; s *= 2) {
    double inc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      inc = std::max(inc, std::abs(f.values[(j + s) % m] - f.values[j]));
    }
    lags.push_back(2.0 * kPi * static_cast<double>(s) / static_cast<double>(m));
    incs.push_back(inc);
  }
}

}  // namespace

HolderEstimate holder_modulus(const BoundaryFunction& f, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("holder_modulus: alpha must be in (0, 1]");
  }
  HolderEstimate est;
  est.exponent = alpha;
  dyadic_increments(f, est.lags, est.max_increments);
  est.seminorm = 0.0;
  for (std::size_t i = 0; i < est.lags.size(); ++i) {
    if (est.lags[i] > 1.0) continue;  // keeps alpha -> seminorm monotone
    est.seminorm = std::max(est.seminorm,
                            est.max_increments[i] / std::pow(est.lags[i], alpha));
  }
  return est;
}

HolderEstimate holder_fit(const BoundaryFunction& f) {
  HolderEstimate est;
  dyadic_increments(f, est.lags, est.max_increments);

  // Fit over a small-lag window: the Hoelder exponent is an asymptotic
  // small-increment property, and large lags mix in the bulk shape of f.
  // The three smallest lags are skipped because spectral-truncation ringing
  // puts an M-independent floor under the one-spacing increments; the window
  // then keeps the next five dyadic lags, never entering the two largest
  // (where the increment saturates at the range of f).
  std::vector<double> lx, ly;
  const std::size_t usable =
      est.lags.size() > 2 ? est.lags.size() - 2 : est.lags.size();
  const std::size_t first = est.lags.size() > 8 ? 3 : 0;
  const std::size_t last = std::min(usable, first + 5);
  for (std::size_t i = first; i < last; ++i) {
    if (est.max_increments[i] < 1e-13) continue;
    lx.push_back(std::log(est.lags[i]));
    ly.push_back(std::log(est.max_increments[i]));
  }
  if (lx.size() < 2) {
    // Flat function: no measurable increments. Report the Lipschitz end.
    est.exponent = 1.0;
    est.seminorm = 0.0;
    return est;
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double rss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double res = ly[i] - (intercept + slope * lx[i]);
    rss += res * res;
  }
  est.fit_residual = std::sqrt(rss / n);
  est.exponent = std::clamp(slope, 1e-3, 1.0);
  est.seminorm = 0.0;
  for (std::size_t i = 0; i < est.lags.size(); ++i) {
    if (est.lags[i] > 1.0) continue;
    est.seminorm = std::max(
        est.seminorm, est.max_increments[i] / std::pow(est.lags[i], est.exponent));
  }
  return est;
}

}  // namespace specfac
