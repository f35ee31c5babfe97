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

#ifndef SPECFAC_FACTORIZATION_HPP
#define SPECFAC_FACTORIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "specfac/spectra.hpp"

namespace specfac {

// Strictly positive real boundary function on the frequency grid.
struct SpectralDensity {
  BoundaryFunction boundary;
  double floor_delta;  // min_j Phi(omega_j)

  // Validates realness (imaginary parts <= 1e-12) and records the floor.
  // Strict positivity is enforced by check_admissible, not here, so that a
  // sign violation can be reported with the offending frequency.
  static SpectralDensity from_boundary(BoundaryFunction b);
};

struct AdmissibilityReport {
  double delta;        // min sample
  double pw_integral;  // (1/2pi) int log Phi
  double delta_min;    // configured floor
  bool pass;
};

// Analytic logarithm g+ = u + i v and the outer function F+ = exp(g+).
struct OuterFunction {
  CausalSeries g_plus;            // cepstral one-sided doubling of log Phi
  BoundaryFunction f_plus_boundary;  // exp(g+) on the grid
  SpectralDensity density;        // the Phi this was built from
  double recon_residual;          // sup | |F+| - Phi | / sup Phi
  int degree;
};

struct SpectralFactors {
  CausalSeries phi_plus;        // Phi+ = exp(g+/2)
  CausalSeries phi_minus_conj;  // p with Phi-(1/z) = sum conj(p_k) z^k
  BoundaryFunction phi_plus_boundary;
  BoundaryFunction phi_minus_boundary;  // conj(Phi+) on the grid
  double anticausal_leakage;            // energy fraction
};

// Radial trace of the Poisson / conjugate-Poisson integrals of log Phi.
// Sign convention: u + i v equals the Herglotz integral of log Phi, so
// u(r,theta) -> log Phi(theta) and v is minus the imaginary part of the
// cepstral g+ evaluated at r e^{-i theta}.
struct RadialTrace {
  double theta;
  std::vector<double> radii;
  std::vector<double> u;
  std::vector<double> v;
};

struct FactorizationOptions {
  double delta_min = 1e-6;
  double tol_recon = 1e-8;    // relative boundary-modulus residual
  double tol_causal = 1e-10;  // relative anti-causal energy
};

// Reports the density floor, the grid-level Paley-Wiener integral and a
// pass/fail against delta_min. Throws std::domain_error naming the offending
// frequency if some sample is not strictly positive.
AdmissibilityReport check_admissible(const SpectralDensity& phi,
                                     double delta_min = 1e-6);

// Cepstral construction: c = analyze(log Phi, K); g+ = c_0 + 2 sum c_k z^k;
// F+ = exp(g+). Throws DiagnosticError if the boundary-modulus identity
// | exp(g+) | = Phi fails beyond tol_recon.
OuterFunction outer_function(const SpectralDensity& phi, int half_width,
                             const FactorizationOptions& opt = {});

// Phi+ = exp(g+/2), Phi-(e^{-i omega}) = conj(Phi+(e^{-i omega})).
SpectralFactors spectral_factors(const OuterFunction& outer,
                                 const FactorizationOptions& opt = {});

// H_W = exp(-g+/2) re-analyzed to a causal series.
CausalSeries whitening_filter(const OuterFunction& outer,
                              const FactorizationOptions& opt = {});

// Direct trapezoid quadrature of the Poisson and conjugate-Poisson integrals
// of log Phi along the given radii. Throws std::domain_error if any r >= 1.
RadialTrace poisson_radial(const SpectralDensity& phi, double theta,
                           const std::vector<double>& radii);

// Independent ground truth for rational spectra
//   Phi(omega) = a_0 + 2 sum_{k>=1} a_k cos(k omega).
// Forms the associated degree-2n polynomial, splits roots across the unit
// circle by companion-matrix eigenvalues, and returns the causal factor
// scaled so Phi+ * Phi- = Phi. Throws std::domain_error if a root lies on
// the circle within 1e-10 (density not strictly positive).
CausalSeries rational_factor_oracle(const std::vector<double>& cosine_coeffs);

// Relative anti-causal energy of a boundary function after re-analysis at
// half width M/2 - 1. Shared diagnostic for the exp/sqrt/inverse route.
double anticausal_leakage(const BoundaryFunction& f);

}  // namespace specfac

#endif  // SPECFAC_FACTORIZATION_HPP
