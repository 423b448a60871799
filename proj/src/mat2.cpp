#include "cosserat2d/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cosserat2d {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorKind::NonPositiveDeterminant: return "NonPositiveDeterminant";
    case ErrorKind::NotARotation: return "NotARotation";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::RequiresNonClassical: return "RequiresNonClassical";
    case ErrorKind::NonPositiveSingularValue: return "NonPositiveSingularValue";
    case ErrorKind::LogUndefined: return "LogUndefined";
    case ErrorKind::NonFiniteEnergy: return "NonFiniteEnergy";
    case ErrorKind::InadmissibleKappa: return "InadmissibleKappa";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<double> angle)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      angle_(angle) {}

Mat2::Mat2(double e11, double e12, double e21, double e22)
    : e11_(e11), e12_(e12), e21_(e21), e22_(e22) {
  if (!std::isfinite(e11) || !std::isfinite(e12) || !std::isfinite(e21) ||
      !std::isfinite(e22)) {
    throw Error(ErrorKind::NonFiniteEntry, "matrix entries must be finite");
  }
}

double Mat2::frobenius() const noexcept { return std::sqrt(frobenius_sq()); }

Mat2 Mat2::sym() const {
  const double off = 0.5 * (e12_ + e21_);
  return Mat2(e11_, off, off, e22_);
}

Mat2 Mat2::skew() const {
  const double off = 0.5 * (e12_ - e21_);
  return Mat2(0.0, off, -off, 0.0);
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2(a.e11_ + b.e11_, a.e12_ + b.e12_, a.e21_ + b.e21_, a.e22_ + b.e22_);
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return Mat2(a.e11_ - b.e11_, a.e12_ - b.e12_, a.e21_ - b.e21_, a.e22_ - b.e22_);
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2(a.e11_ * b.e11_ + a.e12_ * b.e21_, a.e11_ * b.e12_ + a.e12_ * b.e22_,
              a.e21_ * b.e11_ + a.e22_ * b.e21_, a.e21_ * b.e12_ + a.e22_ * b.e22_);
}

Mat2 operator*(double s, const Mat2& a) {
  return Mat2(s * a.e11_, s * a.e12_, s * a.e21_, s * a.e22_);
}

double max_abs_diff(const Mat2& a, const Mat2& b) noexcept {
  return std::max({std::abs(a.e11_ - b.e11_), std::abs(a.e12_ - b.e12_),
                   std::abs(a.e21_ - b.e21_), std::abs(a.e22_ - b.e22_)});
}

double Angle::normalize(double x) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (x > -std::numbers::pi && x <= std::numbers::pi) return x;
  if (!std::isfinite(x)) return x;
  double r = std::remainder(x, two_pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

double angular_distance(Angle a, Angle b) noexcept {
  return std::abs(Angle::normalize(a.radians() - b.radians()));
}

Deformation::Deformation(const Mat2& m) : m_(m) {
  const double d = m.det();
  if (!(d > 0.0)) {
    std::ostringstream msg;
    msg << "det F = " << d << " is not positive";
    throw Error(ErrorKind::NonPositiveDeterminant, msg.str());
  }
}

Deformation Deformation::scaled(double c) const {
  if (!(c > 0.0)) throw Error(ErrorKind::InvalidArgument, "scale factor must be positive");
  return Deformation(c * m_);
}

Rotation::Rotation(Angle angle) noexcept
    : c_(std::cos(angle.radians())), s_(std::sin(angle.radians())) {}

Rotation Rotation::from_matrix(const Mat2& m, double tol) {
  const Mat2 gram = m.transpose() * m;
  const double orth = (gram - Mat2::identity()).frobenius();
  const double det_err = std::abs(m.det() - 1.0);
  if (orth > tol || det_err > tol) {
    std::ostringstream msg;
    msg << "|R^T R - 1| = " << orth << ", |det R - 1| = " << det_err;
    throw Error(ErrorKind::NotARotation, msg.str());
  }
  return Rotation(m.e11(), m.e21());
}

Angle Rotation::angle() const noexcept { return Angle(std::atan2(s_, c_)); }

Mat2 Rotation::matrix() const { return Mat2(c_, -s_, s_, c_); }

Rotation operator*(const Rotation& a, const Rotation& b) noexcept {
  return Rotation(a.c_ * b.c_ - a.s_ * b.s_, a.s_ * b.c_ + a.c_ * b.s_);
}

Mat2 transpose_times(const Rotation& r, const Mat2& f) {
  // R^T = (c s; -s c)
  const double c = r.cos();
  const double s = r.sin();
  return Mat2(c * f.e11() + s * f.e21(), c * f.e12() + s * f.e22(),
              -s * f.e11() + c * f.e21(), -s * f.e12() + c * f.e22());
}

SingularPair::SingularPair(double a, double b) : s1_(std::max(a, b)), s2_(std::min(a, b)) {
  if (!std::isfinite(s1_) || !std::isfinite(s2_) || !(s2_ > 0.0)) {
    throw Error(ErrorKind::NonPositiveSingularValue, "singular values must be positive");
  }
}

}  // namespace cosserat2d
