#include "cosserat2d/planar.hpp"

#include <cmath>

namespace cosserat2d {

TraceInvariants trace_invariants(const Deformation& f) {
  const Mat2& m = f.matrix();
  const double frob_sq = m.frobenius_sq();
  const double det = m.det();
  return TraceInvariants{
      .tr_f = m.trace(),
      .tr_jf = m.e12() - m.e21(),
      .tr_u = std::sqrt(frob_sq + 2.0 * det),
      .det_f = det,
      .frob_f = std::sqrt(frob_sq),
  };
}

double stretch_trace(const Deformation& f) {
  const Mat2& m = f.matrix();
  return std::sqrt(m.frobenius_sq() + 2.0 * m.det());
}

Angle polar_angle(const Deformation& f) {
  const Mat2& m = f.matrix();
  // (cos, sin) = (tr F, -tr JF) / tr U; the positive factor drops out of atan2.
  return Angle(std::atan2(m.e21() - m.e12(), m.trace()));
}

Rotation polar_rotation(const Deformation& f) {
  const TraceInvariants inv = trace_invariants(f);
  const double c = inv.tr_f / inv.tr_u;
  const double s = -inv.tr_jf / inv.tr_u;
  return Rotation::from_matrix(Mat2(c, -s, s, c));
}

PolarDecomposition polar_decompose(const Deformation& f) {
  const Rotation rp = polar_rotation(f);
  return PolarDecomposition{
      .alpha_p = polar_angle(f),
      .rotation = rp,
      .stretch = transpose_times(rp, f.matrix()),
  };
}

SingularPair singular_values(const Deformation& f) {
  const Mat2& m = f.matrix();
  const double tr_u = stretch_trace(f);
  // tr U^2 - 4 det F = |F|^2 - 2 det F = (F11 - F22)^2 + (F12 + F21)^2 >= 0
  const double gap = std::hypot(m.e11() - m.e22(), m.e12() + m.e21());
  const double s1 = 0.5 * (tr_u + gap);
  return SingularPair(s1, m.det() / s1);
}

Rotation rotation(Angle alpha) noexcept { return Rotation(alpha); }

Mat2 cofactor(const Mat2& x) { return Mat2(x.e22(), -x.e12(), -x.e21(), x.e11()); }

Deformation cofactor_transform(const Deformation& f) {
  return Deformation(cofactor(f.matrix()).transpose());
}

Angle relative_angle(Angle alpha, const Deformation& f) {
  return Angle(polar_angle(f).radians() - alpha.radians());
}

double trace_of_square(const Mat2& x) noexcept {
  const double t = x.trace();
  return t * t - 2.0 * x.det();
}

}  // namespace cosserat2d
