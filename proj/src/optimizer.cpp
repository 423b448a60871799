#include "cosserat2d/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cosserat2d/planar.hpp"
#include "cosserat2d/reduction.hpp"

namespace cosserat2d {

const char* to_string(Branch b) noexcept {
  return b == Branch::Classical ? "Classical" : "Pitchfork";
}

std::vector<Angle> MinimizerSet::angles() const {
  if (branch == Branch::Classical) return {alpha_p};
  return {alpha_plus, alpha_minus};
}

double pitchfork_beta(double tr_u, double rho) noexcept {
  if (!(tr_u >= rho)) return 0.0;
  // arccos(rho / tr U), without acos's loss of accuracy next to tr U = rho
  return std::atan2(std::sqrt((tr_u - rho) * (tr_u + rho)), rho);
}

MinimizerSet optimal_set(const Deformation& f, const Weights& w) {
  const TraceInvariants inv = trace_invariants(f);
  const Angle alpha_p = polar_angle(f);

  MinimizerSet out{
      .branch = Branch::Classical,
      .alpha_p = alpha_p,
      .alpha_plus = alpha_p,
      .alpha_minus = alpha_p,
      .beta = 0.0,
      .energy = 0.0,
      .tr_u = inv.tr_u,
      .rho = std::nullopt,
  };

  if (w.regime() == Regime::NonClassical) {
    const double rho = singular_radius(w);
    out.rho = rho;
    if (inv.tr_u >= rho) {
      out.branch = Branch::Pitchfork;
      out.beta = pitchfork_beta(inv.tr_u, rho);
      out.alpha_plus = Angle(alpha_p.radians() + out.beta);
      out.alpha_minus = Angle(alpha_p.radians() - out.beta);
    }
  }

  if (out.branch == Branch::Classical) {
    out.energy = shear_stretch_energy(Rotation(alpha_p), f, w);
  } else {
    out.energy = std::min(shear_stretch_energy(Rotation(out.alpha_plus), f, w),
                          shear_stretch_energy(Rotation(out.alpha_minus), f, w));
  }
  return out;
}

EnergyLevels critical_energy_levels(const Deformation& f) {
  const TraceInvariants inv = trace_invariants(f);
  const double c = 0.5 * inv.frob_f * inv.frob_f - inv.det_f + 2.0;
  const double half_sq = 0.5 * inv.tr_u * inv.tr_u;
  EnergyLevels levels{
      .w1 = half_sq + 2.0 * inv.tr_u + c,
      .w2 = half_sq - 2.0 * inv.tr_u + c,
      .w3 = std::nullopt,
  };
  if (inv.tr_u >= 2.0) levels.w3 = c - 2.0;
  return levels;
}

CriticalSet critical_set(const Deformation& f) {
  const Angle alpha_p = polar_angle(f);
  const double tr_u = stretch_trace(f);
  CriticalSet out{
      .classical_pair = {alpha_p, Angle(alpha_p.radians() + std::numbers::pi)},
      .nonclassical = std::nullopt,
      .levels = critical_energy_levels(f),
  };
  if (tr_u >= 2.0) {
    const double beta = pitchfork_beta(tr_u, 2.0);
    out.nonclassical = std::pair{Angle(alpha_p.radians() + beta),
                                 Angle(alpha_p.radians() - beta)};
  }
  return out;
}

double stationarity_residual(Angle alpha, const Deformation& f) {
  const Mat2& m = f.matrix();
  const double tr_f = m.trace();
  const double tr_jf = m.e12() - m.e21();
  const double c = std::cos(alpha.radians());
  const double s = std::sin(alpha.radians());
  const double t = tr_f * c - tr_jf * s;
  const double dt = -tr_f * s - tr_jf * c;
  return (t - 2.0) * dt;
}

double signed_skew_defect(Angle alpha, const Deformation& f) {
  const Mat2 y = transpose_times(Rotation(alpha), f.matrix());
  return 0.5 * (y.e12() - y.e21());
}

double microstrain_symmetry_defect(const Rotation& r, const Deformation& f) {
  const Mat2 y = transpose_times(r, f.matrix());
  return 0.5 * std::abs(y.e12() - y.e21());
}

}  // namespace cosserat2d
