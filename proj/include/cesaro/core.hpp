// Copyright 2026 the cesaro-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cesaro {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct LabError : std::runtime_error {
  explicit LabError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand lives on the wrong interval, or two operands disagree about it.
struct DomainError : LabError {
  using LabError::LabError;
};

/// An analytic evaluator produced a non-finite value at a quadrature node.
struct EvaluationError : LabError {
  EvaluationError(const std::string& msg, double where)
      : LabError(msg), node(where) {}
  double node;
};

/// Grid L2 norm keeps growing under panel refinement: the function is not
/// square integrable at the resolution we can certify.
struct IntegrabilityWarning : LabError {
  using LabError::LabError;
};

struct IntegrabilityError : LabError {
  using LabError::LabError;
};

struct ConvergenceError : LabError {
  using LabError::LabError;
};

/// Requested point sits on the spectrum; no resolvent there.
struct SpectrumError : LabError {
  using LabError::LabError;
};

struct ParameterError : LabError {
  using LabError::LabError;
};

struct GridError : LabError {
  using LabError::LabError;
};

struct DomainOfGeneratorError : LabError {
  using LabError::LabError;
};

struct UnimodularError : LabError {
  using LabError::LabError;
};

struct WindowError : LabError {
  WindowError(const std::string& msg, int suggestion)
      : LabError(msg), suggested_window(suggestion) {}
  int suggested_window;
};

struct IllConditionedError : LabError {
  using LabError::LabError;
};

struct SingularPointError : LabError {
  using LabError::LabError;
};

}  // namespace cesaro
