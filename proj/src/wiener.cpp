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

#include "specfac/wiener.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "specfac/errors.hpp"

namespace specfac {

BoundaryFunction gamma_quotient(const CrossSpectrum& psi,
                                const SpectralFactors& factors) {
  const BoundaryFunction& minus = factors.phi_minus_boundary;
  if (!(psi.boundary.grid == minus.grid)) {
    throw std::invalid_argument("gamma_quotient: grid mismatch");
  }
  std::vector<cplx> v(psi.boundary.values.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double mag = std::abs(minus.values[j]);
    if (mag < 1e-12) {
      throw DiagnosticError("gamma_quotient: singular quotient, |Phi-| too small",
                            mag, 1e-12);
    }
    v[j] = psi.boundary.values[j] / minus.values[j];
  }
  return BoundaryFunction(psi.boundary.grid, std::move(v));
}

CausalSeries estimation_filter(const BoundaryFunction& gamma, int half_width) {
  return positive_part(analyze(gamma, half_width));
}

CausalSeries wiener_cascade(const CausalSeries& whitening,
                            const CausalSeries& estimation,
                            const FrequencyGrid& grid, int half_width,
                            double* leakage_out) {
  BoundaryFunction w = synthesize(whitening, grid);
  BoundaryFunction e = synthesize(estimation, grid);
  std::vector<cplx> prod(w.values.size());
  for (std::size_t j = 0; j < prod.size(); ++j) {
    prod[j] = w.values[j] * e.values[j];
  }
  BoundaryFunction hb(grid, std::move(prod));
  HarmonicSeries full = analyze(hb, static_cast<int>(grid.size()) / 2 - 1);
  const double total = full.energy();
  const double leak = total > 0.0 ? full.anticausal_energy() / total : 0.0;
  if (leakage_out != nullptr) *leakage_out = leak;
  std::vector<cplx> c(static_cast<std::size_t>(half_width) + 1);
  for (int k = 0; k <= half_width; ++k) {
    c[static_cast<std::size_t>(k)] = full.coeff(k);
  }
  return CausalSeries(std::move(c));
}

WienerSolution solve_wiener(const SpectralDensity& phi, const CrossSpectrum& psi,
                            int half_width, const FactorizationOptions& opt) {
  OuterFunction outer = outer_function(phi, static_cast<int>(
                                                 phi.boundary.grid.size()) /
                                                 2 -
                                                 1,
                                       opt);
  SpectralFactors factors = spectral_factors(outer, opt);
  CausalSeries hw = whitening_filter(outer, opt).truncated(half_width);
  BoundaryFunction gamma = gamma_quotient(psi, factors);
  CausalSeries he = estimation_filter(gamma, half_width);
  double leak = 0.0;
  CausalSeries h = wiener_cascade(hw, he, phi.boundary.grid, half_width, &leak);
  return WienerSolution{std::move(hw), std::move(he), std::move(h),
                        std::move(gamma), leak};
}

ToeplitzSolution toeplitzsolve_impl(const std::vector<double>& ry,
                                    const std::vector<double>& rxy, double rx0,
                                    int length) {
  Eigen::MatrixXd R(length, length);
  for (int i = 0; i < length; ++i) {
    for (int j = 0; j < length; ++j) {
      R(i, j) = ry[static_cast<std::size_t>(std::abs(i - j))];
    }
  }
  Eigen::VectorXd b(length);
  for (int i = 0; i < length; ++i) b(i) = rxy[static_cast<std::size_t>(i)];

  Eigen::LLT<Eigen::MatrixXd> llt(R);
  Eigen::VectorXd h;
  double rcond;
  if (llt.info() == Eigen::Success) {
    h = llt.solve(b);
    rcond = llt.rcond();
  } else {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(R);
    h = lu.solve(b);
    rcond = lu.rcond();
  }
  double mmse = rx0;
  std::vector<double> taps(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    taps[static_cast<std::size_t>(i)] = h(i);
    mmse -= h(i) * b(i);
  }
  const bool warn = rcond > 0.0 && 1.0 / rcond > 1e12;
  return ToeplitzSolution{length, std::move(taps), mmse, rcond, warn};
}

ToeplitzSolution toeplitz_fir_oracle(const SpectralDensity& phi,
                                     const CrossSpectrum& psi, double rx0,
                                     int length) {
  const int m = static_cast<int>(phi.boundary.grid.size());
  if (length < 1 || length > m / 4) {
    throw std::invalid_argument("toeplitz_fir_oracle: requires 1 <= L <= M/4");
  }
  HarmonicSeries sy = analyze(phi.boundary, length);
  HarmonicSeries sxy = analyze(psi.boundary, length);
  std::vector<double> ry(static_cast<std::size_t>(length));
  std::vector<double> rxy(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    ry[static_cast<std::size_t>(k)] = sy.coeff(k).real();
    rxy[static_cast<std::size_t>(k)] = sxy.coeff(k).real();
  }
  return toeplitzsolve_impl(ry, rxy, rx0, length);
}

double spectral_mse(const CausalSeries& h, const SpectralDensity& phi,
                    const CrossSpectrum& psi, double rx0) {
  const FrequencyGrid& grid = phi.boundary.grid;
  const int m = static_cast<int>(grid.size());
  const int max_k = std::min(h.degree(), m / 2 - 1);
  HarmonicSeries sxy = analyze(psi.boundary, max_k);
  double cross = 0.0;
  for (int k = 0; k <= max_k; ++k) {
    cross += (h.coeff(k) * std::conj(sxy.coeff(k))).real();
  }
  BoundaryFunction hb = synthesize(h, grid);
  double quad = 0.0;
  for (int j = 0; j < m; ++j) {
    quad += std::norm(hb.values[static_cast<std::size_t>(j)]) *
            phi.boundary.values[static_cast<std::size_t>(j)].real();
  }
  quad /= static_cast<double>(m);
  return rx0 - 2.0 * cross + quad;
}

}  // namespace specfac
