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

#include "specfac/models.hpp"

#include <cmath>
#include <stdexcept>

namespace specfac {

namespace {

SpectralDensity density_from(const FrequencyGrid& grid,
                             const std::function<double(double)>& f) {
  return SpectralDensity::from_boundary(BoundaryFunction::sample_real(grid, f));
}

double grid_mean(const BoundaryFunction& b) {
  double acc = 0.0;
  for (const cplx& v : b.values) acc += v.real();
  return acc / static_cast<double>(b.values.size());
}

double holder_cusp(double w, double alpha) {
  return std::pow(std::abs(std::sin(0.5 * w)), alpha);
}

}  // namespace

SpectralDensity ar1_density(double a, const FrequencyGrid& grid) {
  return density_from(grid, [a](double w) {
    const double re = 1.0 - a * std::cos(w);
    const double im = a * std::sin(w);
    return (1.0 - a * a) / (re * re + im * im);
  });
}

SpectralDensity make_density(const std::string& name, const FrequencyGrid& grid) {
  if (name == "const4") {
    return density_from(grid, [](double) { return 4.0; });
  }
  if (name == "raised_cos") {
    return density_from(grid, [](double w) { return 1.25 + std::cos(w); });
  }
  if (name == "rational2") {
    return density_from(grid, [](double w) {
      const cplx e = std::polar(1.0, -w);
      return std::norm(1.0 + 0.9 * e) * std::norm(1.0 - 0.4 * e);
    });
  }
  if (name == "ar1") {
    return density_from(grid, [](double w) {
      const cplx e = std::polar(1.0, -w);
      return 1.0 / std::norm(1.0 - 0.8 * e);
    });
  }
  if (name == "ar1_noisy") {
    return density_from(grid, [](double w) {
      const cplx e = std::polar(1.0, -w);
      return (1.0 - 0.64) / std::norm(1.0 - 0.8 * e) + 1.0;
    });
  }
  if (name == "exp_cos") {
    return density_from(grid, [](double w) { return std::exp(std::cos(w)); });
  }
  if (name == "cos2") {
    return density_from(grid, [](double w) {
      return 2.0 + std::cos(w) + 0.5 * std::cos(2.0 * w);
    });
  }
  if (name.rfind("holder_", 0) == 0) {
    const double alpha = std::stod(name.substr(7));
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw std::invalid_argument("make_density: bad holder exponent");
    }
    return density_from(
        grid, [alpha](double w) { return 0.5 + holder_cusp(w, alpha); });
  }
  throw std::invalid_argument("make_density: unknown density '" + name + "'");
}

const std::vector<std::string>& smooth_corpus() {
  static const std::vector<std::string> names = {
      "const4", "raised_cos", "rational2", "ar1", "ar1_noisy", "exp_cos",
      "cos2"};
  return names;
}

Scenario make_ar1_plus_noise(double a, double sigma2,
                             const FrequencyGrid& grid) {
  auto phix = [a](double w) {
    const cplx e = std::polar(1.0, -w);
    return (1.0 - a * a) / std::norm(1.0 - a * e);
  };
  SpectralDensity phi =
      density_from(grid, [&](double w) { return phix(w) + sigma2; });
  CrossSpectrum psi{BoundaryFunction::sample_real(grid, phix),
                    "builtin:ar1_plus_noise"};
  return Scenario{"ar1_plus_noise", std::move(phi), std::move(psi), 1.0};
}

Scenario make_holder_plus_noise(double alpha, double c, double sigma2,
                                const FrequencyGrid& grid) {
  auto phix = [alpha, c](double w) { return c + holder_cusp(w, alpha); };
  SpectralDensity phi =
      density_from(grid, [&](double w) { return phix(w) + sigma2; });
  CrossSpectrum psi{BoundaryFunction::sample_real(grid, phix),
                    "builtin:holder_plus_noise"};
  const double rx0 = grid_mean(psi.boundary);
  return Scenario{"holder_plus_noise", std::move(phi), std::move(psi), rx0};
}

Scenario make_passthrough(const SpectralDensity& phi) {
  CrossSpectrum psi{phi.boundary, "builtin:passthrough"};
  const double rx0 = grid_mean(phi.boundary);
  return Scenario{"passthrough", phi, std::move(psi), rx0};
}

Scenario make_scenario(const std::string& name, const FrequencyGrid& grid) {
  if (name == "ar1_plus_noise") return make_ar1_plus_noise(0.8, 1.0, grid);
  if (name == "holder_plus_noise") {
    return make_holder_plus_noise(0.5, 0.25, 0.25, grid);
  }
  if (name == "passthrough") {
    return make_passthrough(make_density("raised_cos", grid));
  }
  throw std::invalid_argument("make_scenario: unknown scenario '" + name + "'");
}

}  // namespace specfac
