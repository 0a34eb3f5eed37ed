// Copyright 2026 The vqsm Authors
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
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace vqsm {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;
using Vec3 = Eigen::Vector3d;

/// Bohr radius in Ångström.
inline constexpr double kBohrInAngstrom = 0.52917721067;

/// Chemical accuracy threshold (Hartree).
inline constexpr double kChemicalAccuracy = 1.6e-3;

// Error hierarchy. Every library failure derives from vqsm::Error so callers
// can catch a single type at the CLI boundary.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class ScfError : public Error {
 public:
  ScfError(const std::string& what, double last_energy)
      : Error(what), last_energy_(last_energy) {}
  double last_energy() const noexcept { return last_energy_; }

 private:
  double last_energy_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Raised by the gain energy when the two levels are (numerically) degenerate.
class DegenerateGapError : public Error {
 public:
  using Error::Error;
};

/// A trial vector lies (numerically) inside the span of the current basis.
class LinearDependenceError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace vqsm
