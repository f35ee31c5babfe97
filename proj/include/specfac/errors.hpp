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

#ifndef SPECFAC_ERRORS_HPP
#define SPECFAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specfac {

// Numerical diagnostic: the computation finished but a residual or leakage
// bound was violated. Carries the measured value so callers can report it.
class DiagnosticError : public std::runtime_error {
 public:
  DiagnosticError(const std::string& what, double measured, double tolerance)
      : std::runtime_error(what + " (measured " + std::to_string(measured) +
                           ", tolerance " + std::to_string(tolerance) + ")"),
        measured_(measured),
        tolerance_(tolerance) {}

  double measured() const { return measured_; }
  double tolerance() const { return tolerance_; }

 private:
  double measured_;
  double tolerance_;
};

}  // namespace specfac

#endif  // SPECFAC_ERRORS_HPP
