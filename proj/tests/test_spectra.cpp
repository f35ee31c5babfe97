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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "specfac/spectra.hpp"

using namespace specfac;
using std::numbers::pi;

namespace {

// Dense trapezoid quadrature oracle for the coefficient integral
//   f_k = (1/2pi) int f(e^{-i w}) e^{i k w} dw,
// independent of the FFT path under test.
cplx quad_coeff(const std::function<cplx(double)>& f, int k,
                std::size_t nodes = 1 << 16) {
  cplx acc(0.0);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double w = -pi + 2.0 * pi * static_cast<double>(j) / nodes;
    acc += f(w) * std::polar(1.0, k * w);
  }
  return acc / static_cast<double>(nodes);
}

// Dense quadrature oracle for the positive-time Cauchy transform.
cplx quad_cauchy(const std::function<cplx(double)>& f, double r, double theta,
                 std::size_t nodes = 1 << 16) {
  const cplx z = std::polar(r, -theta);
  cplx acc(0.0);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double w = -pi + 2.0 * pi * static_cast<double>(j) / nodes;
    acc += f(w) / (1.0 - z * std::polar(1.0, w));
  }
  return acc / static_cast<double>(nodes);
}

}  // namespace

TEST_CASE("frequency grid layout") {
  FrequencyGrid grid(16);
  CHECK(grid.size() == 16);
  CHECK(grid.node(0) == doctest::Approx(-pi));
  CHECK(grid.node(8) == doctest::Approx(0.0));
  CHECK(grid.spacing() == doctest::Approx(2.0 * pi / 16));
  CHECK_THROWS_AS(FrequencyGrid(12), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyGrid(4), std::invalid_argument);
}

TEST_CASE("analyze: constant") {
  FrequencyGrid grid(16);
  auto f = BoundaryFunction::sample(grid, [](double) { return cplx(1.0); });
  HarmonicSeries s = analyze(f, 2);
  CHECK(std::abs(s.coeff(0) - 1.0) < 1e-14);
  for (int k : {-2, -1, 1, 2}) CHECK(std::abs(s.coeff(k)) < 1e-14);
}

TEST_CASE("analyze: convention-forcing e^{-iw} -> k=+1") {
  FrequencyGrid grid(16);
  auto f = BoundaryFunction::sample(
      grid, [](double w) { return std::polar(1.0, -w); });
  HarmonicSeries s = analyze(f, 2);
  CHECK(std::abs(s.coeff(1) - 1.0) < 1e-14);
  for (int k : {-2, -1, 0, 2}) CHECK(std::abs(s.coeff(k)) < 1e-14);
}

TEST_CASE("analyze: 1.25 + cos w against quadrature oracle") {
  auto fn = [](double w) { return cplx(1.25 + std::cos(w)); };
  FrequencyGrid grid(64);
  HarmonicSeries s = analyze(BoundaryFunction::sample(grid, fn), 2);
  for (int k = -2; k <= 2; ++k) {
    CHECK(std::abs(s.coeff(k) - quad_coeff(fn, k)) < 1e-12);
  }
  CHECK(std::abs(s.coeff(0) - 1.25) < 1e-13);
  CHECK(std::abs(s.coeff(1) - 0.5) < 1e-13);
  CHECK(std::abs(s.coeff(-1) - 0.5) < 1e-13);
  CHECK(std::abs(s.coeff(2)) < 1e-13);
}

TEST_CASE("analyze: aliasing guard") {
  FrequencyGrid grid(16);
  auto f = BoundaryFunction::sample(grid, [](double) { return cplx(1.0); });
  CHECK_THROWS_AS(analyze(f, 8), std::invalid_argument);
  CHECK_NOTHROW(analyze(f, 7));
}

TEST_CASE("synthesize: constant and convention case") {
  FrequencyGrid grid(32);
  HarmonicSeries c(2);
  c.set_coeff(0, 3.0);
  BoundaryFunction b = synthesize(c, grid);
  for (const cplx& v : b.values) CHECK(std::abs(v - 3.0) < 1e-14);

  HarmonicSeries d(2);
  d.set_coeff(1, 1.0);
  BoundaryFunction e = synthesize(d, grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    CHECK(std::abs(e.values[j] - std::polar(1.0, -grid.node(j))) < 1e-14);
  }
}

TEST_CASE("synthesize: two-sided pointwise oracle") {
  FrequencyGrid grid(32);
  HarmonicSeries s(1);
  s.set_coeff(-1, 1.0);
  s.set_coeff(0, 2.0);
  s.set_coeff(1, 3.0);
  BoundaryFunction b = synthesize(s, grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double w = grid.node(j);
    const cplx expect =
        std::polar(1.0, w) + 2.0 + 3.0 * std::polar(1.0, -w);
    CHECK(std::abs(b.values[j] - expect) < 1e-13);
  }
}

TEST_CASE("round trip synthesize/analyze at full half-width") {
  FrequencyGrid grid(256);
  const int k = static_cast<int>(grid.size()) / 2 - 1;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HarmonicSeries s(k);
  for (int i = -k; i <= k; ++i) s.set_coeff(i, cplx(u(rng), u(rng)));
  HarmonicSeries back = analyze(synthesize(s, grid), k);
  const double scale = std::sqrt(s.energy());
  for (int i = -k; i <= k; ++i) {
    CHECK(std::abs(back.coeff(i) - s.coeff(i)) < 1e-12 * scale);
  }
}

TEST_CASE("hermitian symmetry for real boundary data") {
  FrequencyGrid grid(128);
  auto f = BoundaryFunction::sample_real(grid, [](double w) {
    return 2.0 + std::cos(w) - 0.3 * std::sin(3.0 * w);
  });
  HarmonicSeries s = analyze(f, 20);
  for (int k = 1; k <= 20; ++k) {
    CHECK(std::abs(s.coeff(-k) - std::conj(s.coeff(k))) < 1e-12);
  }
}

TEST_CASE("positive_part definition and projection") {
  HarmonicSeries s(1);
  s.set_coeff(-1, 1.0);
  s.set_coeff(0, 2.0);
  s.set_coeff(1, 3.0);
  CausalSeries p = positive_part(s);
  REQUIRE(p.degree() == 1);
  CHECK(std::abs(p.coeff(0) - 2.0) < 1e-15);
  CHECK(std::abs(p.coeff(1) - 3.0) < 1e-15);

  HarmonicSeries neg(3);
  neg.set_coeff(-2, 5.0);
  CausalSeries z = positive_part(neg);
  CHECK(z.degree() == 0);
  CHECK(std::abs(z.coeff(0)) == 0.0);

  // Idempotence after re-embedding.
  CausalSeries twice = positive_part(embed(p, 4));
  CHECK(twice.degree() == p.degree());
  for (int k = 0; k <= p.degree(); ++k) {
    CHECK(std::abs(twice.coeff(k) - p.coeff(k)) < 1e-15);
  }
}

TEST_CASE("positive part matches radial Cauchy evaluation") {
  // Trapezoid Cauchy aliasing decays like r^M; M = 512 puts it below 1e-6
  // at r = 0.9.
  FrequencyGrid grid(512);
  auto gamma = BoundaryFunction::sample(grid, [](double w) {
    return std::polar(1.0, w) + 2.0 + 3.0 * std::polar(1.0, -w);
  });
  CausalSeries p = positive_part(analyze(gamma, 4));
  REQUIRE(p.degree() >= 1);
  CHECK(std::abs(p.coeff(0) - 2.0) < 1e-13);
  CHECK(std::abs(p.coeff(1) - 3.0) < 1e-13);
  const cplx via_cauchy = cauchy_positive_radial(gamma, 0.9, 0.0);
  const cplx via_series = p.eval(cplx(0.9, 0.0));
  CHECK(std::abs(via_cauchy - via_series) < 1e-6);
}

TEST_CASE("cauchy transform: constant, negative-index, polynomial") {
  FrequencyGrid grid(256);
  auto c = BoundaryFunction::sample(grid, [](double) { return cplx(2.5); });
  CHECK(std::abs(cauchy_positive_radial(c, 0.3, 1.0) - 2.5) < 1e-12);

  auto neg = BoundaryFunction::sample(
      grid, [](double w) { return std::polar(1.0, w); });
  const cplx got = cauchy_positive_radial(neg, 0.5, 0.0);
  CHECK(std::abs(got) < 1e-12);
  const cplx oracle = quad_cauchy([](double w) { return std::polar(1.0, w); },
                                  0.5, 0.0);
  CHECK(std::abs(got - oracle) < 1e-10);

  auto gamma = BoundaryFunction::sample(grid, [](double w) {
    return std::polar(1.0, w) + 2.0 + 3.0 * std::polar(1.0, -w);
  });
  CHECK(std::abs(cauchy_positive_radial(gamma, 0.9, 0.0) - 4.7) < 1e-10);
  CHECK_THROWS_AS(cauchy_positive_radial(gamma, 1.0, 0.0), std::domain_error);
}

TEST_CASE("cauchy transform: r -> 0 limit") {
  FrequencyGrid grid(256);
  // Zero first-order coefficient keeps the O(r) term out of the budget.
  auto f = BoundaryFunction::sample(grid, [](double w) {
    return cplx(2.0) + 5.0 * std::polar(1.0, -2.0 * w);
  });
  CHECK(std::abs(cauchy_positive_radial(f, 1e-6, 0.7) - 2.0) < 1e-8);

  // Nonzero f_1 contributes |f_1| r; only a looser bound can hold.
  auto g = BoundaryFunction::sample(grid, [](double w) {
    return cplx(2.0) + 3.0 * std::polar(1.0, -w);
  });
  CHECK(std::abs(cauchy_positive_radial(g, 1e-6, 0.0) - 2.0) < 1e-5);
}

TEST_CASE("sup distance and sup norm") {
  FrequencyGrid grid(64);
  auto f = BoundaryFunction::sample(grid, [](double w) { return cplx(std::cos(w)); });
  CHECK(sup_distance(f, f) == 0.0);
  CHECK(sup_norm(f) == doctest::Approx(1.0));

  auto zero = BoundaryFunction::sample(grid, [](double) { return cplx(0.0); });
  auto h = BoundaryFunction::sample(grid, [](double w) {
    return 1.0 + 0.5 * std::polar(1.0, -w);
  });
  CHECK(sup_distance(zero, h) == doctest::Approx(1.5));
}

TEST_CASE("holder modulus: constants and alpha monotonicity") {
  FrequencyGrid grid(1024);
  auto c = BoundaryFunction::sample(grid, [](double) { return cplx(4.2); });
  for (double a : {0.3, 0.7, 1.0}) {
    CHECK(holder_modulus(c, a).seminorm == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(holder_modulus(c, 0.0), std::domain_error);
  CHECK_THROWS_AS(holder_modulus(c, 1.5), std::domain_error);

  auto cusp = BoundaryFunction::sample_real(grid, [](double w) {
    return std::sqrt(std::abs(std::sin(w / 2.0)));
  });
  double prev = -1.0;
  for (double a : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    const double s = holder_modulus(cusp, a).seminorm;
    CHECK(s >= prev);
    prev = s;
  }
}

TEST_CASE("holder fit: cusp and smooth references") {
  FrequencyGrid grid(4096);
  auto cusp = BoundaryFunction::sample_real(grid, [](double w) {
    return std::sqrt(std::abs(std::sin(w / 2.0)));
  });
  const HolderEstimate he = holder_fit(cusp);
  CHECK(he.exponent >= 0.45);
  CHECK(he.exponent <= 0.55);

  auto smooth = BoundaryFunction::sample_real(grid, [](double w) {
    return std::cos(w);
  });
  const HolderEstimate hs = holder_fit(smooth);
  CHECK(hs.exponent >= 0.95);
  CHECK(hs.exponent <= 1.0);
}
