// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cliffbundle {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;   // dense complex, column-major
using RMat = Eigen::MatrixXd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Error taxonomy. Every core failure mode maps onto one of these so the C API
// can translate exceptions into stable error codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidArgument : Error {
  using Error::Error;
};
struct CapacityError : Error {  // dimension caps (blade tables, lattice sizes)
  using Error::Error;
};
struct SignatureMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct SingularOperator : Error {  // non-invertible / ill-conditioned inputs
  using Error::Error;
};
struct StabilityError : Error {  // dt * ||H|| guard and similar
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace cliffbundle
