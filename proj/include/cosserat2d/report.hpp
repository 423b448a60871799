#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosserat2d/energy.hpp"
#include "cosserat2d/oracle.hpp"
#include "cosserat2d/sweep.hpp"

namespace cosserat2d {

/// Shortest round-trip decimal, '.' separator regardless of locale.
std::string format_number(double x);

struct MinimizeOptions {
  bool certify = false;
  std::size_t grid_n = kDefaultGridN;
  bool degrees = false;
  /// Shifts the closed-form angles by 1e-3 before certification.
  bool inject_fault = false;
};

/// Certification tolerance on the angle sets (closed form vs. oracle).
inline constexpr double kCertifyAngleTol = 1e-6;

struct MinimizeReport {
  nlohmann::json json;
  bool certified = true;  ///< false only when certify was requested and failed
};

/// Schema "cosserat2d.minimize/1"; see docs/formats.md.
MinimizeReport minimize_report(const Deformation& f, const Weights& w,
                               const MinimizeOptions& opts);

/// Schema "cosserat2d.critical/1".
nlohmann::json critical_report(const Deformation& f, bool degrees);

/// Schema "cosserat2d.energy-levels/1".
nlohmann::json energy_levels_report(const Deformation& f);

nlohmann::json bifurcation_json(const std::vector<BifurcationRow>& rows, const Weights& w,
                                bool degrees);
nlohmann::json shear_json(const std::vector<ShearRow>& rows, bool degrees);

/// Header: tr_u,beta_plus,beta_minus
void write_bifurcation_csv(std::ostream& os, const std::vector<BifurcationRow>& rows,
                           bool degrees);

/// Header: gamma,alpha_p,alpha_plus,alpha_minus,W1,W2,W3
void write_shear_csv(std::ostream& os, const std::vector<ShearRow>& rows, bool degrees);

/// Re-evaluates shear_stretch_energy at every angle of a minimize report
/// and returns the largest deviation from the reported energy.
double reevaluate_minimize_report(const nlohmann::json& report);

}  // namespace cosserat2d
