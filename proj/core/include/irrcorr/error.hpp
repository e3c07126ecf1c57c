// Copyright 2026 The irrcorr Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace irrcorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong dimensions, bad indices, out-of-range arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A full-rank state was required but the smallest eigenvalue is at or below
/// the full-rank threshold.
class RankDeficientError : public InvalidArgument {
 public:
  RankDeficientError(const std::string& what, double eigenvalue)
      : InvalidArgument(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// Coordinates that do not describe a positive semidefinite, unit-trace matrix.
class NotAStateError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Iterative solver stopped before reaching its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int order, int iterations,
                   double residual)
      : Error(what), order_(order), iterations_(iterations),
        residual_(residual) {}
  int order() const noexcept { return order_; }
  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int order_;
  int iterations_;
  double residual_;
};

/// The dual iterate ran off to infinity: the targets sit on the boundary of
/// the state space and no full-rank maximiser exists.
class InfeasibleError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace irrcorr
