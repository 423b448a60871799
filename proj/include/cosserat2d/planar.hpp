#pragma once

#include "cosserat2d/mat2.hpp"

namespace cosserat2d {

/// Scalar invariants of F that drive every closed form in the library.
struct TraceInvariants {
  double tr_f;    ///< F11 + F22
  double tr_jf;   ///< F12 - F21, i.e. tr(J F) with J the quarter turn
  double tr_u;    ///< tr sqrt(F^T F) = sqrt(|F|^2 + 2 det F)
  double det_f;
  double frob_f;  ///< |F| (Frobenius)
};

TraceInvariants trace_invariants(const Deformation& f);

/// tr U without the rest of the invariants.
double stretch_trace(const Deformation& f);

struct PolarDecomposition {
  Angle alpha_p;
  Rotation rotation;
  Mat2 stretch;  ///< U = polar(F)^T F
};

/// Closed-form planar polar decomposition F = R_p U.
///
/// polar(F) = (1/tr U) (tr F, tr JF; -tr JF, tr F). The angle is recovered
/// with atan2 from (sin, cos) = (-tr JF, tr F) / tr U so that the sign of
/// the rotation is kept.
PolarDecomposition polar_decompose(const Deformation& f);

Angle polar_angle(const Deformation& f);
Rotation polar_rotation(const Deformation& f);

/// sigma_{1,2} = (tr U +- sqrt(tr U^2 - 4 det F)) / 2.
SingularPair singular_values(const Deformation& f);

Rotation rotation(Angle alpha) noexcept;

/// cof(X) = det X * X^{-1}.
Mat2 cofactor(const Mat2& x);

/// tau(F) = cof(F)^T.
Deformation cofactor_transform(const Deformation& f);

/// beta = alpha_p(F) - alpha, so that R(beta) = R(alpha)^T polar(F).
Angle relative_angle(Angle alpha, const Deformation& f);

/// tr(X^2) via Cayley-Hamilton: (tr X)^2 - 2 det X.
double trace_of_square(const Mat2& x) noexcept;

}  // namespace cosserat2d
