#pragma once

#include <numbers>

#include "cosserat2d/errors.hpp"

namespace cosserat2d {

/// Real 2x2 matrix, row-major (e11 e12; e21 e22). Entries are finite.
class Mat2 {
 public:
  constexpr Mat2() noexcept = default;
  Mat2(double e11, double e12, double e21, double e22);

  static Mat2 identity() noexcept { return Mat2(Raw{}, 1.0, 0.0, 0.0, 1.0); }
  static Mat2 diag(double a, double b) { return Mat2(a, 0.0, 0.0, b); }
  /// The quarter-turn (0 -1; 1 0).
  static Mat2 quarter_turn() noexcept { return Mat2(Raw{}, 0.0, -1.0, 1.0, 0.0); }

  double e11() const noexcept { return e11_; }
  double e12() const noexcept { return e12_; }
  double e21() const noexcept { return e21_; }
  double e22() const noexcept { return e22_; }

  double trace() const noexcept { return e11_ + e22_; }
  double det() const noexcept { return e11_ * e22_ - e12_ * e21_; }
  double frobenius_sq() const noexcept {
    return e11_ * e11_ + e12_ * e12_ + e21_ * e21_ + e22_ * e22_;
  }
  double frobenius() const noexcept;

  Mat2 transpose() const noexcept { return Mat2(Raw{}, e11_, e21_, e12_, e22_); }
  Mat2 sym() const;
  Mat2 skew() const;

  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(double s, const Mat2& a);
  friend Mat2 operator*(const Mat2& a, double s) { return s * a; }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  /// Largest absolute entry difference.
  friend double max_abs_diff(const Mat2& a, const Mat2& b) noexcept;

 private:
  struct Raw {};
  constexpr Mat2(Raw, double a, double b, double c, double d) noexcept
      : e11_(a), e12_(b), e21_(c), e22_(d) {}

  double e11_ = 0.0;
  double e12_ = 0.0;
  double e21_ = 0.0;
  double e22_ = 0.0;
};

/// Rotation angle normalized to (-pi, pi].
class Angle {
 public:
  constexpr Angle() noexcept = default;
  explicit Angle(double radians) noexcept : radians_(normalize(radians)) {}

  static Angle from_degrees(double degrees) noexcept {
    return Angle(degrees * std::numbers::pi / 180.0);
  }

  double radians() const noexcept { return radians_; }
  double degrees() const noexcept { return radians_ * 180.0 / std::numbers::pi; }

  /// Maps x to (-pi, pi]; -pi is sent to pi.
  static double normalize(double x) noexcept;

  friend bool operator==(Angle, Angle) = default;

 private:
  double radians_ = 0.0;
};

/// Distance on the circle, in [0, pi].
double angular_distance(Angle a, Angle b) noexcept;

/// Member of GL+(2): finite entries and det > 0.
class Deformation {
 public:
  explicit Deformation(const Mat2& m);
  Deformation(double e11, double e12, double e21, double e22)
      : Deformation(Mat2(e11, e12, e21, e22)) {}

  static Deformation identity() { return Deformation(Mat2::identity()); }

  const Mat2& matrix() const noexcept { return m_; }
  double det() const noexcept { return m_.det(); }

  /// Positive multiple c*F, c > 0.
  Deformation scaled(double c) const;

 private:
  Mat2 m_;
};

/// Member of SO(2), stored as (cos, sin).
class Rotation {
 public:
  Rotation() noexcept = default;
  explicit Rotation(Angle angle) noexcept;

  static constexpr double kMembershipTol = 1e-12;

  /// Validates orthogonality and unit determinant; throws NotARotation.
  static Rotation from_matrix(const Mat2& m, double tol = kMembershipTol);

  double cos() const noexcept { return c_; }
  double sin() const noexcept { return s_; }
  Angle angle() const noexcept;
  Mat2 matrix() const;
  Rotation inverse() const noexcept { return Rotation(c_, -s_); }

  friend Rotation operator*(const Rotation& a, const Rotation& b) noexcept;
  friend Rotation operator-(const Rotation& r) noexcept { return Rotation(-r.c_, -r.s_); }

 private:
  Rotation(double c, double s) noexcept : c_(c), s_(s) {}
  double c_ = 1.0;
  double s_ = 0.0;
};

/// R^T F for a rotation R.
Mat2 transpose_times(const Rotation& r, const Mat2& f);

/// Ordered singular values sigma1 >= sigma2 > 0. Sorts on construction.
class SingularPair {
 public:
  SingularPair(double a, double b);
  double sigma1() const noexcept { return s1_; }
  double sigma2() const noexcept { return s2_; }
  friend bool operator==(const SingularPair&, const SingularPair&) = default;

 private:
  double s1_;
  double s2_;
};

}  // namespace cosserat2d
