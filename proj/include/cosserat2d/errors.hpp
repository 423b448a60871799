#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace cosserat2d {

enum class ErrorKind {
  NonFiniteEntry,
  NonPositiveDeterminant,
  NotARotation,
  InvalidWeights,
  RequiresNonClassical,
  NonPositiveSingularValue,
  LogUndefined,
  NonFiniteEnergy,
  InadmissibleKappa,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` discriminates.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<double> angle = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }

  /// Offending angle for NonFiniteEnergy.
  std::optional<double> angle() const noexcept { return angle_; }

 private:
  ErrorKind kind_;
  std::optional<double> angle_;
};

}  // namespace cosserat2d
