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

#ifndef SPECFAC_SPECTRA_HPP
#define SPECFAC_SPECTRA_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace specfac {

using cplx = std::complex<double>;

// Uniform frequency grid omega_j = -pi + 2*pi*j/M, j = 0..M-1.
// M must be a power of two, M >= 8.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(std::size_t size);

  std::size_t size() const { return size_; }
  double node(std::size_t j) const;
  double spacing() const;

  bool operator==(const FrequencyGrid&) const = default;

 private:
  std::size_t size_;
};

// Samples f(e^{-i omega_j}) on a frequency grid.
struct BoundaryFunction {
  FrequencyGrid grid;
  std::vector<cplx> values;

  BoundaryFunction(FrequencyGrid g, std::vector<cplx> v);

  // Sample a scalar function of omega on the grid.
  static BoundaryFunction sample(const FrequencyGrid& grid,
                                 const std::function<cplx(double)>& f);
  static BoundaryFunction sample_real(const FrequencyGrid& grid,
                                      const std::function<double(double)>& f);

  double max_imag() const;
};

// Two-sided coefficient sequence f_k, -K <= k <= K, under the convention
//   f(e^{-i omega}) = sum_k f_k e^{-i k omega},
//   f_k = (1/2pi) int f(e^{-i omega}) e^{i k omega} d omega.
class HarmonicSeries {
 public:
  explicit HarmonicSeries(int half_width);

  int half_width() const { return half_width_; }
  cplx coeff(int k) const;        // zero outside [-K, K]
  void set_coeff(int k, cplx v);  // throws outside [-K, K]

  double energy() const;           // sum |f_k|^2
  double anticausal_energy() const;  // sum_{k<0} |f_k|^2

 private:
  int half_width_;
  std::vector<cplx> coeffs_;  // index k + K
};

// One-sided sequence h_k, 0 <= k <= K; h(z) = sum h_k z^k analytic in |z|<1.
// The frequency response is h(e^{-i omega}).
class CausalSeries {
 public:
  CausalSeries() : coeffs_(1, cplx(0.0)) {}
  explicit CausalSeries(std::vector<cplx> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  cplx coeff(int k) const;  // zero outside [0, K]
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  std::vector<cplx>& coeffs() { return coeffs_; }

  cplx eval(cplx z) const;  // Horner
  double energy() const;

  CausalSeries truncated(int degree) const;
  CausalSeries scaled_radially(double r) const;  // h_k -> h_k r^k

 private:
  std::vector<cplx> coeffs_;
};

// Hoelder smoothness measurement over dyadic circular lags.
struct HolderEstimate {
  double exponent;             // alpha (given or fitted), in (0, 1]
  double seminorm;             // max increment / lag^alpha over the lag set
  std::vector<double> lags;    // dyadic lags used, radians
  std::vector<double> max_increments;  // max_j |f(w_j + lag) - f(w_j)|
  double fit_residual = 0.0;   // rms residual of the log-log fit (fit only)
};

// --- operations -------------------------------------------------------------

// Discrete Fourier coefficients of f under the stated convention.
// Exact for trigonometric polynomials of half-width <= K when M >= 2K+2.
// Throws std::invalid_argument if K > M/2 - 1 (aliasing).
HarmonicSeries analyze(const BoundaryFunction& f, int half_width);

// values_j = sum_k f_k e^{-i k omega_j}. Throws if the grid is undersized.
BoundaryFunction synthesize(const HarmonicSeries& s, const FrequencyGrid& grid);
BoundaryFunction synthesize(const CausalSeries& s, const FrequencyGrid& grid);

// Projection onto nonnegative indices.
CausalSeries positive_part(const HarmonicSeries& s);

// Re-embed a causal series as a two-sided series (negative part zero).
HarmonicSeries embed(const CausalSeries& s, int half_width);

// Trapezoid-rule Cauchy transform of f at z = r e^{-i theta}:
//   (1/2pi) int f(omega) / (1 - z e^{i omega}) d omega,
// which evaluates the positive-time part inside the disk.
// Throws std::domain_error if r >= 1 or r < 0.
cplx cauchy_positive_radial(const BoundaryFunction& f, double r, double theta);

// Grid surrogate of the sup norm distance. Throws on grid mismatch.
double sup_distance(const BoundaryFunction& f, const BoundaryFunction& g);
double sup_norm(const BoundaryFunction& f);

// Max of |f(omega+d) - f(omega)| / d^alpha over dyadic lags d = 2pi s/M,
// s = 1, 2, 4, ..., M/2, circular differences. The seminorm maximum is
// restricted to lags <= 1 rad so that it is nondecreasing in alpha.
// Throws std::domain_error if alpha is outside (0, 1].
HolderEstimate holder_modulus(const BoundaryFunction& f, double alpha);

// Least-squares slope of log max-increment vs log lag over the dyadic lag
// set. The two largest lags are excluded (range saturation) as are lags with
// increments at the numerical floor. The slope is clamped to (0, 1].
HolderEstimate holder_fit(const BoundaryFunction& f);

}  // namespace specfac

#endif  // SPECFAC_SPECTRA_HPP
