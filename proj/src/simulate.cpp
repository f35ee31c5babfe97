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

#include "specfac/simulate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace specfac {

std::vector<double> white_noise(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> out(n);
  for (double& v : out) v = gauss(rng);
  return out;
}

std::vector<double> apply_fir(const CausalSeries& h, std::span<const double> x) {
  const int deg = h.degree();
  std::vector<double> taps(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) {
    const cplx c = h.coeff(k);
    if (std::abs(c.imag()) > 1e-9 * (1.0 + std::abs(c.real()))) {
      throw std::invalid_argument("apply_fir: taps must be real");
    }
    taps[static_cast<std::size_t>(k)] = c.real();
  }
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t nn = 0; nn < x.size(); ++nn) {
    const int kmax = static_cast<int>(std::min<std::size_t>(nn, taps.size() - 1));
    double acc = 0.0;
    for (int k = 0; k <= kmax; ++k) {
      acc += taps[static_cast<std::size_t>(k)] * x[nn - static_cast<std::size_t>(k)];
    }
    y[nn] = acc;
  }
  return y;
}

std::vector<double> simulate_process(const CausalSeries& phi_plus,
                                     std::size_t n, std::uint64_t seed) {
  if (n < 4096) {
    throw std::invalid_argument("simulate_process: n must be >= 4096");
  }
  const std::size_t warmup = static_cast<std::size_t>(phi_plus.degree());
  std::vector<double> driver = white_noise(n + warmup, seed);
  std::vector<double> y = apply_fir(phi_plus, driver);
  return std::vector<double>(y.begin() + static_cast<std::ptrdiff_t>(warmup),
                             y.end());
}

std::vector<double> sample_autocorr(std::span<const double> x, int max_lag) {
  const std::size_t n = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  std::vector<double> rho(static_cast<std::size_t>(max_lag), 0.0);
  if (var == 0.0) return rho;
  for (int lag = 1; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (std::size_t i = static_cast<std::size_t>(lag); i < n; ++i) {
      acc += (x[i] - mean) * (x[i - static_cast<std::size_t>(lag)] - mean);
    }
    rho[static_cast<std::size_t>(lag - 1)] = acc / var;
  }
  return rho;
}

ScenarioSample simulate_ar1_plus_noise(double a, double sigma2, std::size_t n,
                                       std::uint64_t seed) {
  if (!(std::abs(a) < 1.0)) {
    throw std::invalid_argument("simulate_ar1_plus_noise: requires |a| < 1");
  }
  constexpr std::size_t kWarmup = 1024;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double innov = std::sqrt(1.0 - a * a);
  const double noise = std::sqrt(sigma2);
  ScenarioSample out;
  out.x.resize(n);
  out.y.resize(n);
  double state = 0.0;
  for (std::size_t i = 0; i < kWarmup; ++i) {
    state = a * state + innov * gauss(rng);
  }
  for (std::size_t i = 0; i < n; ++i) {
    state = a * state + innov * gauss(rng);
    out.x[i] = state;
    out.y[i] = state + noise * gauss(rng);
  }
  return out;
}

double mean_squared_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("mean_squared_error: size mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

}  // namespace specfac
