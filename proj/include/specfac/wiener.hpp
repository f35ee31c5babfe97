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

#ifndef SPECFAC_WIENER_HPP
#define SPECFAC_WIENER_HPP

#include <string>
#include <vector>

#include "specfac/factorization.hpp"
#include "specfac/spectra.hpp"

namespace specfac {

// Cross spectral density Psi between the desired signal and the observation.
struct CrossSpectrum {
  BoundaryFunction boundary;
  std::string provenance;
};

// Whitening filter, estimation filter and their cascade.
struct WienerSolution {
  CausalSeries whitening;   // H_W
  CausalSeries estimation;  // H_E
  CausalSeries cascade;     // H = H_W * H_E
  BoundaryFunction gamma;   // Psi / Phi-
  double cascade_leakage;   // anti-causal energy fraction of the product
};

// Optimal L-tap FIR filter from the Toeplitz normal equations.
struct ToeplitzSolution {
  int length;
  std::vector<double> taps;
  double mmse;
  double rcond;  // reciprocal condition estimate of R_y
  bool conditioning_warning;
};

// Pointwise quotient Psi(omega) / Phi-(e^{-i omega}).
// Throws DiagnosticError where |Phi-| < 1e-12.
BoundaryFunction gamma_quotient(const CrossSpectrum& psi,
                                const SpectralFactors& factors);

// H_E = positive_part(analyze(Gamma, K)).
CausalSeries estimation_filter(const BoundaryFunction& gamma, int half_width);

// Boundary product re-analyzed to a causal series, truncated to half_width.
CausalSeries wiener_cascade(const CausalSeries& whitening,
                            const CausalSeries& estimation,
                            const FrequencyGrid& grid, int half_width,
                            double* leakage_out = nullptr);

// Full pipeline: factorization, quotient, positive part, cascade.
WienerSolution solve_wiener(const SpectralDensity& phi, const CrossSpectrum& psi,
                            int half_width,
                            const FactorizationOptions& opt = {});

// Solves the L x L Toeplitz normal equations R_y h = r_xy with
// autocorrelations taken as Fourier coefficients of Phi and Psi.
// MMSE = r_x(0) - sum h_k r_xy(k). Requires L <= M/4.
ToeplitzSolution toeplitz_fir_oracle(const SpectralDensity& phi,
                                     const CrossSpectrum& psi, double rx0,
                                     int length);

// Spectral MSE of an arbitrary causal filter h applied to the observation:
//   r_x(0) - 2 Re sum h_k r_xy(k) + (1/2pi) int |h|^2 Phi.
double spectral_mse(const CausalSeries& h, const SpectralDensity& phi,
                    const CrossSpectrum& psi, double rx0);

}  // namespace specfac

#endif  // SPECFAC_WIENER_HPP
