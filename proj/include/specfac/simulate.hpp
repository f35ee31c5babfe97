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

#ifndef SPECFAC_SIMULATE_HPP
#define SPECFAC_SIMULATE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "specfac/spectra.hpp"

namespace specfac {

// Generator: mt19937_64 + std::normal_distribution, recorded in reports as
// "mt19937_64/normal_distribution".
inline constexpr const char* kRngName = "mt19937_64/normal_distribution";

// Unit-variance pseudo-random white Gaussian noise.
std::vector<double> white_noise(std::size_t n, std::uint64_t seed);

// Direct-form causal convolution with zero initial state; output length
// equals input length. Imaginary parts of the taps must be negligible.
std::vector<double> apply_fir(const CausalSeries& h, std::span<const double> x);

// Drives the truncated Phi+ FIR with unit-variance white noise and discards
// a warm-up prefix equal to the filter degree. Requires n >= 4096.
std::vector<double> simulate_process(const CausalSeries& phi_plus,
                                     std::size_t n, std::uint64_t seed);

// Normalized sample autocorrelations rho_hat(1..max_lag).
std::vector<double> sample_autocorr(std::span<const double> x, int max_lag);

// Joint sample paths of the signal-plus-noise scenario: x is AR(1) with
// spectrum (1-a^2)/|1 - a e^{-iw}|^2 (unit variance), y = x + v with white
// v of variance sigma2. The AR recursion is warmed up over 1024 samples.
struct ScenarioSample {
  std::vector<double> x;
  std::vector<double> y;
};
ScenarioSample simulate_ar1_plus_noise(double a, double sigma2, std::size_t n,
                                       std::uint64_t seed);

double mean_squared_error(std::span<const double> a, std::span<const double> b);

}  // namespace specfac

#endif  // SPECFAC_SIMULATE_HPP
