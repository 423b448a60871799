#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cosserat2d {

struct PropertyCheck {
  std::string name;
  double max_residual;
  double tolerance;
  std::size_t samples;
  bool passed;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  std::size_t samples = 1000;
  /// Perturbs one closed form so the harness must report a failure.
  bool inject_fault = false;
};

/// Seeded invariant suite over all modules. Deterministic in the options.
std::vector<PropertyCheck> run_verification(const VerifyOptions& opts);

}  // namespace cosserat2d
