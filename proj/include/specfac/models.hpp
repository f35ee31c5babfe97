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

#ifndef SPECFAC_MODELS_HPP
#define SPECFAC_MODELS_HPP

#include <string>
#include <vector>

#include "specfac/factorization.hpp"
#include "specfac/wiener.hpp"

namespace specfac {

// Builtin densities, keyed by name:
//   const4        Phi = 4
//   raised_cos    Phi = 1.25 + cos w
//   rational2     Phi = |1 + 0.9 e^{-iw}|^2 |1 - 0.4 e^{-iw}|^2
//   ar1           Phi = 1 / |1 - 0.8 e^{-iw}|^2
//   ar1_noisy     Phi = (1 - 0.64)/|1 - 0.8 e^{-iw}|^2 + 1
//   exp_cos       Phi = exp(cos w)
//   cos2          Phi = 2 + cos w + 0.5 cos 2w
//   holder_<a>    Phi = 0.5 + |sin(w/2)|^a   (a in {0.3, 0.5, 0.7})
SpectralDensity make_density(const std::string& name, const FrequencyGrid& grid);

// Names of the smooth corpus, in a fixed order.
const std::vector<std::string>& smooth_corpus();

// AR(1) spectrum (1 - a^2)/|1 - a e^{-iw}|^2, unit variance.
SpectralDensity ar1_density(double a, const FrequencyGrid& grid);

// A filtering scenario: observation spectrum Phi, cross spectrum Psi and the
// desired-signal variance r_x(0) (supplied analytically, not derivable from
// Phi and Psi).
struct Scenario {
  std::string name;
  SpectralDensity phi;
  CrossSpectrum psi;
  double rx0;
};

// y = x + v with white v:  Phi = Phi_x + sigma2, Psi = Phi_x.
//   ar1_plus_noise     Phi_x = (1-a^2)/|1-a e^{-iw}|^2, r_x(0) = 1
//   holder_plus_noise  Phi_x = c + |sin(w/2)|^alpha, sigma2 on top;
//                      r_x(0) = mean of Phi_x over the grid
//   passthrough        Psi = Phi (estimating y from y), r_x(0) = mean of Phi
Scenario make_ar1_plus_noise(double a, double sigma2, const FrequencyGrid& grid);
Scenario make_holder_plus_noise(double alpha, double c, double sigma2,
                                const FrequencyGrid& grid);
Scenario make_passthrough(const SpectralDensity& phi);

Scenario make_scenario(const std::string& name, const FrequencyGrid& grid);

}  // namespace specfac

#endif  // SPECFAC_MODELS_HPP
