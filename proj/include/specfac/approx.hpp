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

#ifndef SPECFAC_APPROX_HPP
#define SPECFAC_APPROX_HPP

#include <span>
#include <string>
#include <vector>

#include "specfac/spectra.hpp"

namespace specfac {

enum class ApproxKind { fejer, vallee_poussin, truncation };

std::string to_string(ApproxKind kind);

// FIR approximant of a causal series. Fejer and truncation have degree <= N;
// the Vallee-Poussin mean with parameter N has degree <= 2N-1.
struct PolynomialApproximant {
  ApproxKind kind;
  int parameter;
  CausalSeries coeffs;
};

// Fitted power law e(N) ~ C N^{-alpha} from an error-vs-degree sweep.
struct RateFit {
  std::vector<double> degrees;
  std::vector<double> errors;
  double alpha_hat;
  double c_hat;
  double residual;  // rms residual of the log-log least squares
};

// F_N(z; H) = sum_{k=0}^{N} (1 - k/(N+1)) H_k z^k.
PolynomialApproximant fejer_mean(const CausalSeries& h, int n);

// V_N = 2 F_{2N-1} - F_{N-1}; preserves every coefficient with index <= N.
// Requires N >= 1.
PolynomialApproximant vallee_poussin_mean(const CausalSeries& h, int n);

// Plain truncation to degree N.
PolynomialApproximant truncation(const CausalSeries& h, int n);

// Sup distance between the target and the approximant measured on a 4x
// oversampled grid (grid sup underestimates the true sup norm).
double approx_error(const CausalSeries& target, const PolynomialApproximant& p,
                    int oversample = 4);
double approx_error(const BoundaryFunction& target,
                    const PolynomialApproximant& p, int oversample = 4);

// Least-squares fit of log e = log C - alpha log N. Entries with N < 4 or
// errors below the 1e-7 tolerance floor are excluded before the fit.
// Throws std::domain_error if fewer than 4 usable degrees survive.
RateFit rate_fit(const std::vector<int>& degrees,
                 const std::vector<double>& errors);

// Upper bound on the best approximation eps_N: minimum measured error over a
// candidate set (all candidates must have degree <= N).
double best_approx_upper(const CausalSeries& h, int n,
                         std::span<const PolynomialApproximant> candidates);

}  // namespace specfac

#endif  // SPECFAC_APPROX_HPP
