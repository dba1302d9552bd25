// Copyright 2026 The windres Authors
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

#ifndef WINDRES_ERROR_H_
#define WINDRES_ERROR_H_

#include <stdexcept>
#include <string>

namespace windres {

// Error categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kDomain,            // argument outside the mathematical domain
  kInsufficientData,  // too few usable observations
  kDegenerate,        // data admit no finite estimate (e.g. all speeds equal)
  kConvergence,       // iterative solver did not converge
  kAccuracy,          // quadrature could not reach the requested tolerance
  kIo,
  kSchema,
  kUsage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorKind::kDomain, message) {}
};

class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(const std::string& message)
      : Error(ErrorKind::kInsufficientData, message) {}
};

class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& message)
      : Error(ErrorKind::kDegenerate, message) {}
};

// Carries the solver's last iterate so callers can inspect how far it got.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double last_iterate,
                   double last_residual)
      : Error(ErrorKind::kConvergence, message),
        last_iterate_(last_iterate),
        last_residual_(last_residual) {}

  double last_iterate() const { return last_iterate_; }
  double last_residual() const { return last_residual_; }

 private:
  double last_iterate_;
  double last_residual_;
};

// Carries the best estimate the integrator achieved.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& message, double estimate,
                double error_estimate)
      : Error(ErrorKind::kAccuracy, message),
        estimate_(estimate),
        error_estimate_(error_estimate) {}

  double estimate() const { return estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorKind::kIo, message) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message)
      : Error(ErrorKind::kSchema, message) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message)
      : Error(ErrorKind::kUsage, message) {}
};

}  // namespace windres

#endif  // WINDRES_ERROR_H_
