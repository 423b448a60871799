#include "cosserat2d/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "cosserat2d/optimizer.hpp"
#include "cosserat2d/planar.hpp"
#include "cosserat2d/reduction.hpp"

namespace cosserat2d {
namespace {

using nlohmann::json;

double to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// adding 0.0 turns -0 into +0
json matrix_json(const Mat2& m) {
  return json::array({m.e11() + 0.0, m.e12() + 0.0, m.e21() + 0.0, m.e22() + 0.0});
}

json angle_json(Angle a) { return json{{"rad", a.radians()}, {"deg", a.degrees()}}; }

json angle_set_json(const std::vector<Angle>& angles) {
  json rad = json::array();
  json deg = json::array();
  for (Angle a : angles) {
    rad.push_back(a.radians());
    deg.push_back(a.degrees());
  }
  return json{{"rad", rad}, {"deg", deg}};
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

double angle_out(double rad, bool degrees) { return degrees ? to_deg(rad) : rad; }

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

MinimizeReport minimize_report(const Deformation& f, const Weights& w,
                               const MinimizeOptions& opts) {
  const MinimizerSet opt = optimal_set(f, w);
  const std::vector<Angle> angles = opt.angles();

  json rotations = json::array();
  for (Angle a : angles) rotations.push_back(matrix_json(Rotation(a).matrix()));

  json j{
      {"schema", "cosserat2d.minimize/1"},
      {"input", {{"F", matrix_json(f.matrix())}, {"mu", w.mu()}, {"muc", w.muc()}}},
      {"regime", to_string(w.regime())},
      {"branch", to_string(opt.branch)},
      {"convention", "alpha_plus = alpha_p + beta, alpha_minus = alpha_p - beta"},
      {"alpha_p", angle_json(opt.alpha_p)},
      {"beta", {{"rad", opt.beta}, {"deg", to_deg(opt.beta)}}},
      {"angles", angle_set_json(angles)},
      {"rotations", rotations},
      {"energy", opt.energy},
      {"tr_u", opt.tr_u},
      {"rho", nullptr},
      {"lambda", nullptr},
      {"ftilde", nullptr},
      {"preferred_unit", opts.degrees ? "deg" : "rad"},
  };
  if (w.regime() == Regime::NonClassical) {
    const ReductionData red = reduction_data(f, w);
    j["rho"] = red.rho;
    j["lambda"] = red.lambda;
    j["ftilde"] = matrix_json(red.ftilde.matrix());
  }

  MinimizeReport report{std::move(j), true};
  if (opts.certify) {
    const GridResult oracle = grid_minimize(
        [&](Angle a) { return shear_stretch_energy(Rotation(a), f, w); }, opts.grid_n);
    const std::vector<Angle> oracle_angles = oracle.angles();
    std::vector<Angle> closed = angles;
    if (opts.inject_fault) {
      for (Angle& a : closed) a = Angle(a.radians() + 1e-3);
    }
    const double deviation = set_distance(closed, oracle_angles);
    const double oracle_best = oracle.best_value();
    report.certified = deviation <= kCertifyAngleTol;
    report.json["certification"] = {
        {"grid_n", oracle.grid_n},
        {"oracle_angles", angle_set_json(oracle_angles)},
        {"oracle_energy", oracle_best},
        {"max_angle_deviation", deviation},
        {"energy_deviation", std::abs(oracle_best - opt.energy)},
        {"tolerance", kCertifyAngleTol},
        {"passed", report.certified},
    };
  }
  return report;
}

json critical_report(const Deformation& f, bool degrees) {
  const CriticalSet cs = critical_set(f);
  const auto out = [degrees](Angle a) { return angle_out(a.radians(), degrees); };
  json nonclassical = nullptr;
  if (cs.nonclassical) {
    nonclassical = json::array({out(cs.nonclassical->first), out(cs.nonclassical->second)});
  }
  return json{
      {"schema", "cosserat2d.critical/1"},
      {"input", {{"F", matrix_json(f.matrix())}}},
      {"angle_unit", degrees ? "deg" : "rad"},
      {"tr_u", stretch_trace(f)},
      {"classical_pair", json::array({out(cs.classical_pair.first), out(cs.classical_pair.second)})},
      {"nonclassical_pair", nonclassical},
      {"levels", {{"W1", cs.levels.w1}, {"W2", cs.levels.w2}, {"W3", optional_json(cs.levels.w3)}}},
  };
}

json energy_levels_report(const Deformation& f) {
  const EnergyLevels levels = critical_energy_levels(f);
  const TraceInvariants inv = trace_invariants(f);
  const double c = 0.5 * inv.frob_f * inv.frob_f - inv.det_f + 2.0;
  return json{
      {"schema", "cosserat2d.energy-levels/1"},
      {"input", {{"F", matrix_json(f.matrix())}}},
      {"tr_u", inv.tr_u},
      {"constant", c},
      {"W1", levels.w1},
      {"W2", levels.w2},
      {"W3", optional_json(levels.w3)},
  };
}

json bifurcation_json(const std::vector<BifurcationRow>& rows, const Weights& w,
                      bool degrees) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"tr_u", r.tr_u},
                   {"beta_plus", angle_out(r.beta_plus, degrees)},
                   {"beta_minus", angle_out(r.beta_minus, degrees)}});
  }
  return json{
      {"schema", "cosserat2d.bifurcation/1"},
      {"mu", w.mu()},
      {"muc", w.muc()},
      {"rho", w.regime() == Regime::NonClassical ? json(singular_radius(w)) : json(nullptr)},
      {"angle_unit", degrees ? "deg" : "rad"},
      {"rows", arr},
  };
}

json shear_json(const std::vector<ShearRow>& rows, bool degrees) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"gamma", r.gamma},
                   {"alpha_p", angle_out(r.alpha_p, degrees)},
                   {"alpha_plus", angle_out(r.alpha_plus, degrees)},
                   {"alpha_minus", angle_out(r.alpha_minus, degrees)},
                   {"W1", r.w1},
                   {"W2", r.w2},
                   {"W3", optional_json(r.w3)}});
  }
  return json{
      {"schema", "cosserat2d.sweep-shear/1"},
      {"convention", "alpha_plus = alpha_p + beta, alpha_minus = alpha_p - beta"},
      {"angle_unit", degrees ? "deg" : "rad"},
      {"rows", arr},
  };
}

void write_bifurcation_csv(std::ostream& os, const std::vector<BifurcationRow>& rows,
                           bool degrees) {
  os << "tr_u,beta_plus,beta_minus\n";
  for (const auto& r : rows) {
    os << format_number(r.tr_u) << ',' << format_number(angle_out(r.beta_plus, degrees))
       << ',' << format_number(angle_out(r.beta_minus, degrees)) << '\n';
  }
}

void write_shear_csv(std::ostream& os, const std::vector<ShearRow>& rows, bool degrees) {
  os << "gamma,alpha_p,alpha_plus,alpha_minus,W1,W2,W3\n";
  for (const auto& r : rows) {
    os << format_number(r.gamma) << ',' << format_number(angle_out(r.alpha_p, degrees))
       << ',' << format_number(angle_out(r.alpha_plus, degrees)) << ','
       << format_number(angle_out(r.alpha_minus, degrees)) << ',' << format_number(r.w1)
       << ',' << format_number(r.w2) << ',' << (r.w3 ? format_number(*r.w3) : "") << '\n';
  }
}

double reevaluate_minimize_report(const json& report) {
  const auto& in = report.at("input");
  const auto& fm = in.at("F");
  const Deformation f(fm.at(0).get<double>(), fm.at(1).get<double>(), fm.at(2).get<double>(),
                      fm.at(3).get<double>());
  const Weights w(in.at("mu").get<double>(), in.at("muc").get<double>());
  const double energy = report.at("energy").get<double>();
  double worst = 0.0;
  for (const auto& a : report.at("angles").at("rad")) {
    const double e = shear_stretch_energy(Rotation(Angle(a.get<double>())), f, w);
    worst = std::max(worst, std::abs(e - energy));
  }
  return worst;
}

}  // namespace cosserat2d
