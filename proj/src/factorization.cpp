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

#include "specfac/factorization.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "specfac/errors.hpp"

namespace specfac {

namespace {

BoundaryFunction log_boundary(const SpectralDensity& phi) {
  std::vector<cplx> v(phi.boundary.values.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    v[j] = cplx(std::log(phi.boundary.values[j].real()));
  }
  return BoundaryFunction(phi.boundary.grid, std::move(v));
}

// Boundary-pointwise map followed by re-analysis to a causal series, with an
// anti-causal leakage diagnostic. The workhorse behind exp, sqrt and inverse
// of causal series.
CausalSeries reanalyze_causal(const BoundaryFunction& b, int half_width,
                              double tol_causal, const char* what,
                              double* leakage_out) {
  HarmonicSeries full = analyze(b, static_cast<int>(b.grid.size()) / 2 - 1);
  const double total = full.energy();
  const double leak = total > 0.0 ? full.anticausal_energy() / total : 0.0;
  if (leakage_out != nullptr) *leakage_out = leak;
  if (leak > tol_causal) {
    throw DiagnosticError(std::string(what) + ": anti-causal leakage", leak,
                          tol_causal);
  }
  std::vector<cplx> c(static_cast<std::size_t>(half_width) + 1);
  for (int k = 0; k <= half_width; ++k) {
    c[static_cast<std::size_t>(k)] = full.coeff(k);
  }
  return CausalSeries(std::move(c));
}

}  // namespace

SpectralDensity SpectralDensity::from_boundary(BoundaryFunction b) {
  if (b.max_imag() > 1e-12) {
    throw std::invalid_argument(
        "SpectralDensity: boundary values must be real (imag <= 1e-12)");
  }
  double delta = b.values.empty() ? 0.0 : b.values.front().real();
  for (const cplx& v : b.values) delta = std::min(delta, v.real());
  return SpectralDensity{std::move(b), delta};
}

AdmissibilityReport check_admissible(const SpectralDensity& phi,
                                     double delta_min) {
  const std::size_t m = phi.boundary.grid.size();
  double delta = phi.boundary.values.front().real();
  for (std::size_t j = 0; j < m; ++j) {
    const double v = phi.boundary.values[j].real();
    if (v <= 0.0) {
      throw std::domain_error(
          "check_admissible: nonpositive sample at omega = " +
          std::to_string(phi.boundary.grid.node(j)));
    }
    delta = std::min(delta, v);
  }
  double pw = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    pw += std::log(phi.boundary.values[j].real());
  }
  pw /= static_cast<double>(m);
  return AdmissibilityReport{delta, pw, delta_min, delta >= delta_min};
}

OuterFunction outer_function(const SpectralDensity& phi, int half_width,
                             const FactorizationOptions& opt) {
  const AdmissibilityReport adm = check_admissible(phi, opt.delta_min);
  if (!adm.pass) {
    throw std::domain_error(
        "outer_function: density floor " + std::to_string(adm.delta) +
        " below delta_min " + std::to_string(opt.delta_min));
  }
  const HarmonicSeries cepstrum = analyze(log_boundary(phi), half_width);
  std::vector<cplx> g(static_cast<std::size_t>(half_width) + 1);
  g[0] = cepstrum.coeff(0);
  for (int k = 1; k <= half_width; ++k) {
    g[static_cast<std::size_t>(k)] = 2.0 * cepstrum.coeff(k);
  }
  CausalSeries g_plus(std::move(g));

  BoundaryFunction g_boundary = synthesize(g_plus, phi.boundary.grid);
  std::vector<cplx> fp(g_boundary.values.size());
  for (std::size_t j = 0; j < fp.size(); ++j) {
    fp[j] = std::exp(g_boundary.values[j]);
  }
  BoundaryFunction f_plus(phi.boundary.grid, std::move(fp));

  const double scale = sup_norm(phi.boundary);
  double residual = 0.0;
  for (std::size_t j = 0; j < f_plus.values.size(); ++j) {
    residual = std::max(residual, std::abs(std::abs(f_plus.values[j]) -
                                           phi.boundary.values[j].real()));
  }
  residual /= scale;
  if (residual > opt.tol_recon) {
    throw DiagnosticError("outer_function: boundary modulus residual", residual,
                          opt.tol_recon);
  }
  return OuterFunction{std::move(g_plus), std::move(f_plus), phi, residual,
                       half_width};
}

SpectralFactors spectral_factors(const OuterFunction& outer,
                                 const FactorizationOptions& opt) {
  const FrequencyGrid& grid = outer.density.boundary.grid;
  BoundaryFunction g_boundary = synthesize(outer.g_plus, grid);
  std::vector<cplx> pp(g_boundary.values.size());
  for (std::size_t j = 0; j < pp.size(); ++j) {
    pp[j] = std::exp(0.5 * g_boundary.values[j]);
  }
  BoundaryFunction plus_boundary(grid, std::move(pp));

  double leak = 0.0;
  CausalSeries phi_plus = reanalyze_causal(plus_boundary, outer.degree,
                                           opt.tol_causal, "spectral_factors",
                                           &leak);
  std::vector<cplx> pm(phi_plus.coeffs().size());
  for (std::size_t k = 0; k < pm.size(); ++k) {
    pm[k] = std::conj(phi_plus.coeffs()[k]);
  }
  std::vector<cplx> minus_vals(plus_boundary.values.size());
  for (std::size_t j = 0; j < minus_vals.size(); ++j) {
    minus_vals[j] = std::conj(plus_boundary.values[j]);
  }
  return SpectralFactors{std::move(phi_plus), CausalSeries(std::move(pm)),
                         std::move(plus_boundary),
                         BoundaryFunction(grid, std::move(minus_vals)), leak};
}

CausalSeries whitening_filter(const OuterFunction& outer,
                              const FactorizationOptions& opt) {
  const FrequencyGrid& grid = outer.density.boundary.grid;
  BoundaryFunction g_boundary = synthesize(outer.g_plus, grid);
  std::vector<cplx> hw(g_boundary.values.size());
  for (std::size_t j = 0; j < hw.size(); ++j) {
    hw[j] = std::exp(-0.5 * g_boundary.values[j]);
  }
  return reanalyze_causal(BoundaryFunction(grid, std::move(hw)), outer.degree,
                          opt.tol_causal, "whitening_filter", nullptr);
}

RadialTrace poisson_radial(const SpectralDensity& phi, double theta,
                           const std::vector<double>& radii) {
  for (double r : radii) {
    if (r < 0.0 || r >= 1.0) {
      throw std::domain_error("poisson_radial: radii must lie in [0, 1)");
    }
  }
  const BoundaryFunction lp = log_boundary(phi);
  const std::size_t m = lp.grid.size();
  RadialTrace trace;
  trace.theta = theta;
  trace.radii = radii;
  trace.u.resize(radii.size());
  trace.v.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    double u = 0.0, v = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double d = theta - lp.grid.node(j);
      const double denom = 1.0 - 2.0 * r * std::cos(d) + r * r;
      const double w = lp.values[j].real();
      u += w * (1.0 - r * r) / denom;
      v += w * 2.0 * r * std::sin(d) / denom;
    }
    trace.u[i] = u / static_cast<double>(m);
    trace.v[i] = v / static_cast<double>(m);
  }
  return trace;
}

CausalSeries rational_factor_oracle(const std::vector<double>& cosine_coeffs) {
  std::vector<double> coeffs = cosine_coeffs;
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.empty()) {
    throw std::invalid_argument("rational_factor_oracle: empty coefficients");
  }
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n == 0) {
    if (coeffs[0] <= 0.0) {
      throw std::domain_error("rational_factor_oracle: not strictly positive");
    }
    return CausalSeries({cplx(std::sqrt(coeffs[0]))});
  }

  // p(x) = x^n Phi(x) = sum_{k=-n}^{n} a_{|k|} x^{k+n}, degree 2n.
  std::vector<double> p(static_cast<std::size_t>(2 * n) + 1);
  for (int k = -n; k <= n; ++k) {
    p[static_cast<std::size_t>(k + n)] = coeffs[static_cast<std::size_t>(
        std::abs(k))];
  }
  while (p.size() > 1 && p.back() == 0.0) p.pop_back();
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg == 0) {
    return CausalSeries({cplx(std::sqrt(p[0]))});
  }

  // Companion-matrix roots of the monic normalization.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) {
    comp(i, deg - 1) = -p[static_cast<std::size_t>(i)] /
                       p[static_cast<std::size_t>(deg)];
  }
  Eigen::VectorXcd roots = comp.eigenvalues();

  std::vector<cplx> outside;
  for (int i = 0; i < roots.size(); ++i) {
    const cplx rho(roots(i).real(), roots(i).imag());
    const double dist = std::abs(std::abs(rho) - 1.0);
    if (dist < 1e-10) {
      throw std::domain_error(
          "rational_factor_oracle: root on the unit circle, density not "
          "strictly positive");
    }
    if (std::abs(rho) > 1.0) outside.push_back(rho);
  }
  if (static_cast<int>(outside.size()) * 2 != deg) {
    throw std::domain_error(
        "rational_factor_oracle: roots did not split evenly across the "
        "circle");
  }

  // q(z) = prod (1 - z/rho) over the outside roots; q(0) = 1.
  std::vector<cplx> q{cplx(1.0)};
  for (const cplx& rho : outside) {
    std::vector<cplx> next(q.size() + 1, cplx(0.0));
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k] += q[k];
      next[k + 1] -= q[k] / rho;
    }
    q = std::move(next);
  }

  // Scale so that |Phi+|^2 matches Phi at omega with the largest value
  // (best conditioned sample).
  auto phi_at = [&](double w) {
    double v = cosine_coeffs[0];
    for (int k = 1; k <= n; ++k) {
      v += 2.0 * cosine_coeffs[static_cast<std::size_t>(k)] * std::cos(k * w);
    }
    return v;
  };
  CausalSeries factor(std::move(q));
  double best_w = 0.0, best_phi = phi_at(0.0);
  for (int j = 1; j < 64; ++j) {
    const double w = -M_PI + 2.0 * M_PI * j / 64.0;
    if (phi_at(w) > best_phi) {
      best_phi = phi_at(w);
      best_w = w;
    }
  }
  const double q_mag = std::norm(factor.eval(std::polar(1.0, -best_w)));
  const double s = std::sqrt(best_phi / q_mag);
  for (cplx& c : factor.coeffs()) c *= s;
  // Normalize the constant term to be positive real (outer normalization).
  const cplx c0 = factor.coeffs().front();
  const cplx phase = c0 / std::abs(c0);
  for (cplx& c : factor.coeffs()) c /= phase;
  return factor;
}

double anticausal_leakage(const BoundaryFunction& f) {
  HarmonicSeries s = analyze(f, static_cast<int>(f.grid.size()) / 2 - 1);
  const double total = s.energy();
  return total > 0.0 ? s.anticausal_energy() / total : 0.0;
}

}  // namespace specfac
