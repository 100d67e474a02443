// Copyright 2026 The regen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REGEN_ERRORS_HPP
#define REGEN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regen {

// Three families, mirrored by the CLI exit codes:
//   ParameterError -> 2, IoError -> 3, ProtocolError -> 4.
// ArithmeticError is a programming error (mismatched fields, bad shapes).

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public ArithmeticError {
 public:
  FieldMismatch() : ArithmeticError("operands belong to different fields") {}
};

class ZeroInverse : public ArithmeticError {
 public:
  ZeroInverse() : ArithmeticError("zero has no multiplicative inverse") {}
};

class DimensionMismatch : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class ParameterError : public Error {
 public:
  ParameterError(std::string condition, const std::string& what)
      : Error(condition + ": " + what), condition_(std::move(condition)) {}

  /// Short name of the violated condition, e.g. "A1" or "B2".
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class InvalidField : public ParameterError {
 public:
  explicit InvalidField(const std::string& what) : ParameterError("field", what) {}
};

class A1Violation : public ParameterError {
 public:
  explicit A1Violation(const std::string& what) : ParameterError("A1", what) {}
};

class A2Violation : public ParameterError {
 public:
  explicit A2Violation(const std::string& what) : ParameterError("A2", what) {}
};

class DegreeOrderViolation : public ParameterError {
 public:
  explicit DegreeOrderViolation(const std::string& what)
      : ParameterError("degree-order", what) {}
};

class B1Violation : public ParameterError {
 public:
  explicit B1Violation(const std::string& what) : ParameterError("B1", what) {}
};

class B2Violation : public ParameterError {
 public:
  explicit B2Violation(const std::string& what) : ParameterError("B2", what) {}
};

class NotEnoughCosets : public ParameterError {
 public:
  explicit NotEnoughCosets(const std::string& what)
      : ParameterError("cosets", what) {}
};

/// Bad call-site input: wrong packet/share count, duplicates, lengths.
class ArgumentError : public ParameterError {
 public:
  explicit ArgumentError(const std::string& what)
      : ParameterError("argument", what) {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ProtocolError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public ProtocolError {
 public:
  SingularMatrix(std::size_t rank, std::size_t size)
      : ProtocolError("singular " + std::to_string(size) + "x" +
                      std::to_string(size) + " matrix (rank " +
                      std::to_string(rank) + ")"),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// (B^T (x) A - I) is singular: 1 is an eigenvalue of B^T (x) A.
class SingularStein : public ProtocolError {
 public:
  explicit SingularStein(std::size_t rank)
      : ProtocolError("Stein system matrix is singular (rank " +
                      std::to_string(rank) + ")"),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// Two node indices share a q-cyclotomic coset; reconstruction cannot proceed.
class CosetCollision : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

/// Data that should be consistent is not (tampering, internal corruption).
class CorruptionError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

}  // namespace regen

#endif  // REGEN_ERRORS_HPP
