#pragma once

#include <optional>

#include "cosserat2d/mat2.hpp"

namespace cosserat2d {

enum class LogCase { DistinctReal, ComplexPair, RepeatedReal, Undefined };

/// Which closed-form branch principal_log takes for x.
LogCase log_case(const Mat2& x) noexcept;

/// Principal logarithm of a real 2x2 matrix.
///
/// Every 2x2 matrix function is a + b X. With m = tr X / 2, d = det X and
/// disc = m^2 - d:
///   disc > 0: b = atanh(sqrt(disc)/m) / sqrt(disc)
///   disc < 0: b = atan2(sqrt(-disc), m) / sqrt(-disc)
///   disc = 0: b = 1/m
/// and a = log(d)/2 - b m. Near disc = 0 both quotients use their series.
/// Throws LogUndefined when the spectrum meets (-inf, 0].
Mat2 principal_log(const Mat2& x);

std::optional<Mat2> try_principal_log(const Mat2& x);

}  // namespace cosserat2d
