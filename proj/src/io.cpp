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

#include "specfac/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace specfac {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << std::setprecision(17);
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path.string());
  }
  return in;
}

struct Row {
  double a, b, c;
};

std::vector<Row> read_rows(std::ifstream& in, const std::string& header,
                           const std::string& what) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::runtime_error(what + ": expected header '" + header + "'");
  }
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    Row r{};
    char c1 = 0, c2 = 0;
    if (!(ss >> r.a >> c1 >> r.b >> c2 >> r.c) || c1 != ',' || c2 != ',') {
      throw std::runtime_error(what + ": malformed row '" + line + "'");
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

void write_series_csv(const std::filesystem::path& path, const CausalSeries& s) {
  std::ofstream out = open_out(path);
  out << "k,re,im\n";
  for (int k = 0; k <= s.degree(); ++k) {
    out << k << ',' << s.coeff(k).real() << ',' << s.coeff(k).imag() << '\n';
  }
}

void write_series_csv(const std::filesystem::path& path,
                      const HarmonicSeries& s) {
  std::ofstream out = open_out(path);
  out << "k,re,im\n";
  for (int k = -s.half_width(); k <= s.half_width(); ++k) {
    out << k << ',' << s.coeff(k).real() << ',' << s.coeff(k).imag() << '\n';
  }
}

HarmonicSeries read_series_csv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<Row> rows = read_rows(in, "k,re,im", "read_series_csv");
  int max_abs = 0;
  for (const Row& r : rows) {
    max_abs = std::max(max_abs, std::abs(static_cast<int>(std::lround(r.a))));
  }
  HarmonicSeries s(max_abs);
  for (const Row& r : rows) {
    s.set_coeff(static_cast<int>(std::lround(r.a)), cplx(r.b, r.c));
  }
  return s;
}

CausalSeries read_causal_csv(const std::filesystem::path& path) {
  HarmonicSeries s = read_series_csv(path);
  if (s.anticausal_energy() > 0.0) {
    throw std::runtime_error("read_causal_csv: file has negative-index rows");
  }
  return positive_part(s);
}

void write_boundary_csv(const std::filesystem::path& path,
                        const BoundaryFunction& f) {
  std::ofstream out = open_out(path);
  out << "omega,re,im\n";
  for (std::size_t j = 0; j < f.grid.size(); ++j) {
    out << f.grid.node(j) << ',' << f.values[j].real() << ','
        << f.values[j].imag() << '\n';
  }
}

BoundaryFunction read_boundary_csv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<Row> rows = read_rows(in, "omega,re,im", "read_boundary_csv");
  FrequencyGrid grid(rows.size());
  std::vector<cplx> values(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (std::abs(rows[j].a - grid.node(j)) > 1e-9) {
      throw std::runtime_error(
          "read_boundary_csv: nodes are not the uniform grid");
    }
    values[j] = cplx(rows[j].b, rows[j].c);
  }
  return BoundaryFunction(grid, std::move(values));
}

void write_sequence_csv(const std::filesystem::path& path,
                        const std::vector<double>& x) {
  std::ofstream out = open_out(path);
  out << "n,value\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << i << ',' << x[i] << '\n';
  }
}

}  // namespace specfac
