#include "cosserat2d/shear.hpp"

#include <cmath>
#include <sstream>

#include "cosserat2d/energy.hpp"
#include "cosserat2d/optimizer.hpp"
#include "cosserat2d/planar.hpp"

namespace cosserat2d {

Deformation simple_shear(double gamma) { return Deformation(1.0, gamma, 0.0, 1.0); }

ShearSolution shear_solution(double gamma) {
  const Deformation f = simple_shear(gamma);
  // tr U_gamma = sqrt(4 + gamma^2) >= 2, so the pitchfork is always active.
  const MinimizerSet opt = optimal_set(f, Weights(1.0, 0.0));
  return ShearSolution{
      .gamma = gamma,
      .alpha_p = opt.alpha_p,
      .angles = {opt.alpha_plus, opt.alpha_minus},
      .beta = opt.beta,
      .energy = opt.energy,
      .tr_u = opt.tr_u,
  };
}

Deformation glide_family(double gamma, double kappa) {
  if (!(std::abs(kappa) < 1.0)) {
    std::ostringstream msg;
    msg << "|kappa| = " << std::abs(kappa) << " must be below 1";
    throw Error(ErrorKind::InadmissibleKappa, msg.str());
  }
  return Deformation(1.0 + kappa, gamma, 0.0, 1.0 - kappa);
}

bool cancellation_check(const Deformation& f) {
  const TraceInvariants inv = trace_invariants(f);
  return std::abs(inv.tr_f - 2.0) <= 1e-10 && inv.tr_u >= 2.0 - 1e-12;
}

}  // namespace cosserat2d
