// Copyright 2026 The qsim Authors
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

#include <stdexcept>
#include <string>

namespace qsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (matmul, kron blocks, circuit dims...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An index (wire, qubit count, outcome label, two-level pair) is out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be unitary is not.
class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be Hermitian is not.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/// Iterative eigensolver did not reach its threshold.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Violation of one of the three density-matrix conditions.
class StateError : public Error {
 public:
  enum class Kind { kNotHermitian, kNegativeEigenvalue, kTraceNotOne, kNotNormalized };

  StateError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A probability density on [0,1] failed validation.
class DensityError : public Error {
 public:
  enum class Kind { kBadPartition, kNegative, kNotNormalized, kDomain };

  DensityError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsim
