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

#include "specfac/pathology.hpp"

#include <cmath>
#include <stdexcept>

namespace specfac {

namespace {

// Term amplitudes of h: pairs (k, a_k) with h = sum a_k sin(k w).
std::vector<std::pair<int, double>> sine_terms(PathologyKind kind, int terms) {
  std::vector<std::pair<int, double>> out;
  if (kind == PathologyKind::slow_log_modulus) {
    for (int k = 2; k <= terms; ++k) {
      out.emplace_back(k, 1.0 / (k * std::log(static_cast<double>(k))));
    }
  } else {
    for (int j = 1; (1 << j) <= terms; ++j) {
      out.emplace_back(1 << j, 1.0 / static_cast<double>(j));
    }
  }
  return out;
}

}  // namespace

PathologicalSpectrum make_pathological(PathologyKind kind, int terms,
                                       const FrequencyGrid& grid) {
  if (terms < 8) {
    throw std::invalid_argument("make_pathological: terms must be >= 8");
  }
  if (grid.size() < 2 * static_cast<std::size_t>(terms) + 2) {
    throw std::invalid_argument(
        "make_pathological: grid too small for the truncation order");
  }
  const auto amps = sine_terms(kind, terms);
  // sin(k w) = (e^{i k w} - e^{-i k w}) / (2i): coefficient of e^{-i k w}
  // is i a_k / 2, so we synthesize h by FFT rather than by direct summation.
  HarmonicSeries s(terms);
  for (const auto& [k, a] : amps) {
    s.set_coeff(k, cplx(0.0, 0.5 * a));
    s.set_coeff(-k, cplx(0.0, -0.5 * a));
  }
  BoundaryFunction h = synthesize(s, grid);
  std::vector<cplx> v(h.values.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    v[j] = cplx(std::exp(h.values[j].real()));
  }
  SpectralDensity phi =
      SpectralDensity::from_boundary(BoundaryFunction(grid, std::move(v)));
  return PathologicalSpectrum{kind, terms, {0.0}, std::move(phi)};
}

double conjugate_partial_sum(PathologyKind kind, int terms, double theta,
                             double r) {
  // v(r, theta) of log Phi = h: with h = sum a_k sin(k w), the conjugate
  // (paper sign, Herglotz kernel) contributes -a_k r^k cos(k theta).
  double acc = 0.0;
  for (const auto& [k, a] : sine_terms(kind, terms)) {
    acc -= a * std::pow(r, k) * std::cos(k * theta);
  }
  return acc;
}

BoundaryFunction pathological_gamma(int terms, const FrequencyGrid& grid) {
  if (terms < 8) {
    throw std::invalid_argument("pathological_gamma: terms must be >= 8");
  }
  if (grid.size() < 2 * static_cast<std::size_t>(terms) + 2) {
    throw std::invalid_argument("pathological_gamma: grid too small");
  }
  HarmonicSeries s(terms);
  for (int k = 2; k <= terms; ++k) {
    const double a = 1.0 / (k * std::log(static_cast<double>(k)));
    s.set_coeff(k, cplx(0.5 * a));
    s.set_coeff(-k, cplx(0.5 * a));
  }
  return synthesize(s, grid);
}

namespace {

bool is_nondecreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1]) return false;
  }
  return true;
}

}  // namespace

DivergenceRecord outer_divergence_probe(const SpectralDensity& phi, double theta,
                                        const std::vector<double>& radii) {
  RadialTrace trace = poisson_radial(phi, theta, radii);
  DivergenceRecord rec;
  rec.theta = theta;
  rec.radii = radii;
  rec.magnitudes.resize(radii.size());
  rec.re_trace.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    rec.magnitudes[i] = std::abs(trace.v[i]);
    rec.re_trace[i] = std::exp(trace.u[i]) * std::cos(trace.v[i]);
  }
  rec.nondecreasing = is_nondecreasing(rec.magnitudes);
  rec.max_value = 0.0;
  for (double m : rec.magnitudes) rec.max_value = std::max(rec.max_value, m);
  return rec;
}

DivergenceRecord gamma_divergence_probe(const BoundaryFunction& gamma,
                                        double theta,
                                        const std::vector<double>& radii) {
  DivergenceRecord rec;
  rec.theta = theta;
  rec.radii = radii;
  rec.magnitudes.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    rec.magnitudes[i] = std::abs(cauchy_positive_radial(gamma, radii[i], theta));
  }
  rec.nondecreasing = is_nondecreasing(rec.magnitudes);
  rec.max_value = 0.0;
  for (double m : rec.magnitudes) rec.max_value = std::max(rec.max_value, m);
  return rec;
}

DiskAlgebraGap disk_algebra_gap(const OuterFunction& outer,
                                std::span<const PolynomialApproximant> candidates,
                                double r_probe) {
  if (r_probe < 0.0 || r_probe >= 1.0) {
    throw std::domain_error("disk_algebra_gap: r_probe must be in [0, 1)");
  }
  const FrequencyGrid& grid = outer.density.boundary.grid;
  // F+ at radius r_probe: exp of the radially damped analytic logarithm.
  BoundaryFunction g_r = synthesize(outer.g_plus.scaled_radially(r_probe), grid);
  std::vector<cplx> f(g_r.values.size());
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::exp(g_r.values[j]);
  BoundaryFunction f_probe(grid, std::move(f));

  DiskAlgebraGap gap;
  gap.r_probe = r_probe;
  gap.zero_error = sup_norm(f_probe);
  gap.errors.push_back(gap.zero_error);  // candidate 0: g == 0
  for (const PolynomialApproximant& p : candidates) {
    BoundaryFunction pb =
        synthesize(p.coeffs.scaled_radially(r_probe), grid);
    gap.errors.push_back(sup_distance(f_probe, pb));
  }
  gap.argmin = 0;
  for (std::size_t i = 1; i < gap.errors.size(); ++i) {
    if (gap.errors[i] < gap.errors[gap.argmin]) gap.argmin = i;
  }
  gap.min_error = gap.errors[gap.argmin];
  return gap;
}

}  // namespace specfac
