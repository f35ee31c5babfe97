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

#ifndef SPECFAC_IO_HPP
#define SPECFAC_IO_HPP

#include <filesystem>
#include <string>

#include "specfac/spectra.hpp"

namespace specfac {

// Series CSV: header "k,re,im", one row per coefficient, k ascending.
void write_series_csv(const std::filesystem::path& path, const CausalSeries& s);
void write_series_csv(const std::filesystem::path& path,
                      const HarmonicSeries& s);
HarmonicSeries read_series_csv(const std::filesystem::path& path);
CausalSeries read_causal_csv(const std::filesystem::path& path);

// Boundary CSV: header "omega,re,im".
void write_boundary_csv(const std::filesystem::path& path,
                        const BoundaryFunction& f);
BoundaryFunction read_boundary_csv(const std::filesystem::path& path);

// Sequence CSV: header "n,value".
void write_sequence_csv(const std::filesystem::path& path,
                        const std::vector<double>& x);

}  // namespace specfac

#endif  // SPECFAC_IO_HPP
