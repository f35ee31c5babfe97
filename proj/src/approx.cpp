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

#include "specfac/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specfac {

std::string to_string(ApproxKind kind) {
  switch (kind) {
    case ApproxKind::fejer:
      return "fejer";
    case ApproxKind::vallee_poussin:
      return "vallee_poussin";
    case ApproxKind::truncation:
      return "truncation";
  }
  return "unknown";
}

PolynomialApproximant fejer_mean(const CausalSeries& h, int n) {
  if (n < 0) throw std::invalid_argument("fejer_mean: N must be >= 0");
  const int deg = std::min(n, h.degree());
  std::vector<cplx> c(static_cast<std::size_t>(deg) + 1, cplx(0.0));
  for (int k = 0; k <= deg; ++k) {
    c[static_cast<std::size_t>(k)] =
        h.coeff(k) * (1.0 - static_cast<double>(k) / (n + 1.0));
  }
  return PolynomialApproximant{ApproxKind::fejer, n, CausalSeries(std::move(c))};
}

PolynomialApproximant vallee_poussin_mean(const CausalSeries& h, int n) {
  if (n < 1) throw std::invalid_argument("vallee_poussin_mean: N must be >= 1");
  const PolynomialApproximant f2 = fejer_mean(h, 2 * n - 1);
  const PolynomialApproximant f1 = fejer_mean(h, n - 1);
  std::vector<cplx> c(static_cast<std::size_t>(2 * n - 1) + 1, cplx(0.0));
  for (int k = 0; k <= 2 * n - 1; ++k) {
    c[static_cast<std::size_t>(k)] =
        2.0 * f2.coeffs.coeff(k) - f1.coeffs.coeff(k);
  }
  return PolynomialApproximant{ApproxKind::vallee_poussin, n,
                               CausalSeries(std::move(c))};
}

PolynomialApproximant truncation(const CausalSeries& h, int n) {
  if (n < 0) throw std::invalid_argument("truncation: N must be >= 0");
  return PolynomialApproximant{ApproxKind::truncation, n, h.truncated(n)};
}

namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 8;
  while (p < n) p *= 2;
  return p;
}

double sup_error_on_fine_grid(const CausalSeries& target,
                              const CausalSeries& approx, int oversample) {
  const int deg = std::max(target.degree(), approx.degree());
  const std::size_t fine = next_pow2(
      static_cast<std::size_t>(oversample) * (2 * static_cast<std::size_t>(deg) + 2));
  const FrequencyGrid grid(fine);
  BoundaryFunction a = synthesize(target, grid);
  BoundaryFunction b = synthesize(approx, grid);
  return sup_distance(a, b);
}

}  // namespace

double approx_error(const CausalSeries& target, const PolynomialApproximant& p,
                    int oversample) {
  return sup_error_on_fine_grid(target, p.coeffs, oversample);
}

double approx_error(const BoundaryFunction& target,
                    const PolynomialApproximant& p, int oversample) {
  const int k = static_cast<int>(target.grid.size()) / 2 - 1;
  HarmonicSeries full = analyze(target, k);
  return sup_error_on_fine_grid(positive_part(full), p.coeffs, oversample);
}

RateFit rate_fit(const std::vector<int>& degrees,
                 const std::vector<double>& errors) {
  if (degrees.size() != errors.size()) {
    throw std::invalid_argument("rate_fit: degree/error size mismatch");
  }
  RateFit fit;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (errors[i] < 0.0) {
      throw std::domain_error("rate_fit: negative error value");
    }
    const double e = std::max(errors[i], 1e-300);  // machine floor
    if (degrees[i] < 4) continue;
    if (e < 1e-7) continue;  // factorization tolerance floor contaminates
    fit.degrees.push_back(static_cast<double>(degrees[i]));
    fit.errors.push_back(e);
  }
  if (fit.degrees.size() < 4) {
    throw std::domain_error("rate_fit: need at least 4 usable degrees");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(fit.degrees.size());
  for (std::size_t i = 0; i < fit.degrees.size(); ++i) {
    const double x = std::log(fit.degrees[i]);
    const double y = std::log(fit.errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  fit.alpha_hat = -slope;
  fit.c_hat = std::exp(intercept);
  double rss = 0.0;
  for (std::size_t i = 0; i < fit.degrees.size(); ++i) {
    const double res = std::log(fit.errors[i]) -
                       (intercept + slope * std::log(fit.degrees[i]));
    rss += res * res;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

double best_approx_upper(const CausalSeries& h, int n,
                         std::span<const PolynomialApproximant> candidates) {
  if (candidates.empty()) {
    throw std::invalid_argument("best_approx_upper: empty candidate set");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const PolynomialApproximant& p : candidates) {
    if (p.coeffs.degree() > n) {
      throw std::invalid_argument(
          "best_approx_upper: candidate degree exceeds N");
    }
    best = std::min(best, approx_error(h, p));
  }
  return best;
}

}  // namespace specfac
