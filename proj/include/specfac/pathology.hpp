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

#ifndef SPECFAC_PATHOLOGY_HPP
#define SPECFAC_PATHOLOGY_HPP

#include <span>
#include <vector>

#include "specfac/approx.hpp"
#include "specfac/factorization.hpp"
#include "specfac/spectra.hpp"

namespace specfac {

// Continuous-but-not-Hoelder constructions. Both are desk-scale surrogates:
// at any finite truncation the spectrum is a strictly positive trigonometric
// polynomial exponential, while the conjugate series diverges (very slowly)
// at the singular angle as the truncation order grows.
//
//   slow_log_modulus: h(w) = sum_{k=2}^{K} sin(k w) / (k log k)
//   lacunary_log:     h(w) = sum_{2^j <= K, j>=1} sin(2^j w) / j
//
// Phi = exp(h); the singular angle set E is {0}.
enum class PathologyKind { lacunary_log, slow_log_modulus };

struct PathologicalSpectrum {
  PathologyKind kind;
  int terms;
  std::vector<double> singular_angles;
  SpectralDensity density;
};

struct DivergenceRecord {
  double theta;
  std::vector<double> radii;
  std::vector<double> magnitudes;  // |v| or |Gamma+| along the radii
  std::vector<double> re_trace;    // Re F+ (outer probe only, else empty)
  bool nondecreasing;
  double max_value;
};

struct DiskAlgebraGap {
  double min_error;
  std::size_t argmin;          // index into the candidate list; 0 is g == 0
  double zero_error;           // error of the g == 0 candidate, = sup |F+|
  std::vector<double> errors;  // one per candidate
  double r_probe;
};

// Throws std::invalid_argument if terms < 8.
PathologicalSpectrum make_pathological(PathologyKind kind, int terms,
                                       const FrequencyGrid& grid);

// Partial sum of the conjugate series at angle theta and radius r
// (r = 1 gives the Abel-unsummed partial sum). Closed-form oracle companion
// to the quadrature probes.
double conjugate_partial_sum(PathologyKind kind, int terms, double theta,
                             double r = 1.0);

// Boundary function Gamma(w) = sum_{k=2}^{K} cos(k w)/(k log k), whose
// positive-time part is unbounded at w = 0.
BoundaryFunction pathological_gamma(int terms, const FrequencyGrid& grid);

// Tracks the conjugate-Poisson trace |v| and Re F+ = exp(u) cos(v) along the
// radii. Throws std::domain_error if any r >= 1.
DivergenceRecord outer_divergence_probe(const SpectralDensity& phi, double theta,
                                        const std::vector<double>& radii);

// Tracks |Gamma+(r e^{-i theta})| via the Cauchy transform.
DivergenceRecord gamma_divergence_probe(const BoundaryFunction& gamma,
                                        double theta,
                                        const std::vector<double>& radii);

// Distance from F+ (evaluated at radius r_probe, since boundary values need
// not exist) to each candidate, with g == 0 always prepended as candidate 0.
DiskAlgebraGap disk_algebra_gap(const OuterFunction& outer,
                                std::span<const PolynomialApproximant> candidates,
                                double r_probe = 1.0 - 6.103515625e-05);

}  // namespace specfac

#endif  // SPECFAC_PATHOLOGY_HPP
