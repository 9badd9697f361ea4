#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace nfobs {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

// Error hierarchy. The CLI maps each family onto an exit code:
// ConfigError/IoError -> 2, AssumptionError -> 3, everything numeric -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Derivative order or Γ index outside the supported range.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (e.g. ρ ≤ 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

/// The 2x2 system [I; İ] ζ = (s, ṡ) or the Γ₁¹ pivot is (near) singular.
class SingularError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// An input or trajectory violates a standing assumption of the observer.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace nfobs
