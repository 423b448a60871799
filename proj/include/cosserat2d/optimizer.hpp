#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cosserat2d/energy.hpp"

namespace cosserat2d {

enum class Branch { Classical, Pitchfork };

const char* to_string(Branch b) noexcept;

/// Energy-minimizing rotation angles of W_{mu,muc}(.;F).
///
/// Pitchfork angles are reported as alpha_plus = alpha_p + beta and
/// alpha_minus = alpha_p - beta. At the bifurcation point tr U = rho the
/// branch stays Pitchfork with beta = 0.
struct MinimizerSet {
  Branch branch;
  Angle alpha_p;
  Angle alpha_plus;
  Angle alpha_minus;
  double beta;    ///< arccos(rho / tr U) in [0, pi/2), 0 when Classical
  double energy;  ///< common minimal value
  double tr_u;
  std::optional<double> rho;  ///< absent for classical weights

  std::vector<Angle> angles() const;
};

/// beta(tr U) = arccos(rho / tr U) for tr U >= rho, else 0.
double pitchfork_beta(double tr_u, double rho) noexcept;

MinimizerSet optimal_set(const Deformation& f, const Weights& w);

/// Critical points of W_{1,0}(R(.);F).
struct CriticalSet {
  std::pair<Angle, Angle> classical_pair;  ///< (alpha_p, alpha_p + pi)
  std::optional<std::pair<Angle, Angle>> nonclassical;  ///< solutions of tr(R^T F) = 2
  EnergyLevels levels;
};

CriticalSet critical_set(const Deformation& f);

/// W(1) = 1/2 trU^2 + 2 trU + c, W(2) = 1/2 trU^2 - 2 trU + c, W(3) = -2 + c,
/// c = 1/2 |F|^2 - det F + 2.
EnergyLevels critical_energy_levels(const Deformation& f);

/// d/dalpha W_{1,0}(R(alpha);F) = (t - 2) t' with t = tr(R(alpha)^T F).
double stationarity_residual(Angle alpha, const Deformation& f);

/// (1,2) entry of skew(R(alpha)^T F), signed. Zero exactly at R = +-polar(F).
double signed_skew_defect(Angle alpha, const Deformation& f);

/// |skew(R^T F)_{12}| = |sin beta| tr U / 2.
double microstrain_symmetry_defect(const Rotation& r, const Deformation& f);

}  // namespace cosserat2d
