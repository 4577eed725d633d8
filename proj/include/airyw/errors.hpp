#pragma once

#include <stdexcept>
#include <string>

namespace airyw {

// Error hierarchy shared by all modules. Every failure mode carries a
// human-readable message; callers that can recover catch the specific type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidConfig : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct ContourCrossesPole : Error {
  using Error::Error;
};

struct NonConvergent : Error {
  using Error::Error;
};

struct TruncationTooSmall : Error {
  using Error::Error;
};

struct NearSingular : Error {
  using Error::Error;
};

struct NewtonDiverged : Error {
  double final_residual;
  NewtonDiverged(const std::string& msg, double res)
      : Error(msg), final_residual(res) {}
};

struct OutOfTableRange : Error {
  using Error::Error;
};

struct MethodUnavailable : Error {
  using Error::Error;
};

struct GridError : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct StateInvalid : Error {
  using Error::Error;
};

}  // namespace airyw
