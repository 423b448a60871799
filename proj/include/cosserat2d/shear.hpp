#pragma once

#include <utility>

#include "cosserat2d/mat2.hpp"

namespace cosserat2d {

/// F_gamma = (1 gamma; 0 1).
Deformation simple_shear(double gamma);

/// Optimal non-classical rotations of W_{1,0}(.;F_gamma).
///
/// The set is {0, 2 alpha_p}. `plus` is alpha_p + beta and `minus` is
/// alpha_p - beta, so for gamma > 0 the identity is `plus`, and for
/// gamma < 0 it is `minus`.
struct ShearSolution {
  double gamma;
  Angle alpha_p;
  std::pair<Angle, Angle> angles;  ///< (plus, minus)
  double beta;                     ///< |arctan(gamma/2)|
  double energy;                   ///< gamma^2 / 2
  double tr_u;                     ///< sqrt(4 + gamma^2)
};

ShearSolution shear_solution(double gamma);

/// F_{gamma,kappa} = F_gamma + kappa diag(1, -1), |kappa| < 1.
/// Shares tr F and tr JF with F_gamma. Throws InadmissibleKappa.
Deformation glide_family(double gamma, double kappa);

/// True iff tr F = 2 (to 1e-10) and tr U >= 2; then the identity is one
/// of the optimal rotations of W_{1,0}(.;F).
bool cancellation_check(const Deformation& f);

}  // namespace cosserat2d
