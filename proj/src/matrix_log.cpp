#include "cosserat2d/matrix_log.hpp"

#include <cmath>
#include <limits>

namespace cosserat2d {
namespace {

// Below this |z| the quotients atanh(z)/z and atan(z)/z use their series.
constexpr double kSeriesCutoff = 1e-4;

double atanh_over(double z) noexcept {
  if (std::abs(z) < kSeriesCutoff) {
    const double z2 = z * z;
    return 1.0 + z2 / 3.0 + z2 * z2 / 5.0;
  }
  return std::atanh(z) / z;
}

double atan_over(double z) noexcept {
  if (std::abs(z) < kSeriesCutoff) {
    const double z2 = z * z;
    return 1.0 - z2 / 3.0 + z2 * z2 / 5.0;
  }
  return std::atan(z) / z;
}

struct Spectrum {
  double m;     // half trace
  double d;     // determinant
  double disc;  // m^2 - d
};

Spectrum spectrum(const Mat2& x) noexcept {
  const double m = 0.5 * x.trace();
  const double d = x.det();
  // m^2 - d = ((x11 - x22)/2)^2 + x12 x21, free of the cancellation in m^2 - d
  const double h = 0.5 * (x.e11() - x.e22());
  return {m, d, h * h + x.e12() * x.e21()};
}

bool defined(const Spectrum& s) noexcept {
  if (!(s.d > 0.0)) return false;
  if (s.disc >= 0.0) return s.m > 0.0;  // real eigenvalues share the sign of m
  return true;
}

}  // namespace

LogCase log_case(const Mat2& x) noexcept {
  const Spectrum s = spectrum(x);
  if (!defined(s)) return LogCase::Undefined;
  const double scale = s.m * s.m + std::abs(s.d);
  if (std::abs(s.disc) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    return LogCase::RepeatedReal;
  }
  return s.disc > 0.0 ? LogCase::DistinctReal : LogCase::ComplexPair;
}

std::optional<Mat2> try_principal_log(const Mat2& x) {
  const Spectrum s = spectrum(x);
  if (!defined(s)) return std::nullopt;

  double b;
  if (s.disc > 0.0) {
    const double r = std::sqrt(s.disc);
    b = atanh_over(r / s.m) / s.m;
  } else if (s.disc < 0.0) {
    const double w = std::sqrt(-s.disc);
    if (s.m > 0.0) {
      b = atan_over(w / s.m) / s.m;
    } else {
      b = std::atan2(w, s.m) / w;
    }
  } else {
    b = 1.0 / s.m;
  }
  const double a = 0.5 * std::log(s.d) - b * s.m;
  return Mat2(a + b * x.e11(), b * x.e12(), b * x.e21(), a + b * x.e22());
}

Mat2 principal_log(const Mat2& x) {
  if (auto l = try_principal_log(x)) return *l;
  throw Error(ErrorKind::LogUndefined, "spectrum meets the closed negative real axis");
}

}  // namespace cosserat2d
