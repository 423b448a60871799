#include "cosserat2d/sweep.hpp"

#include <cmath>
#include <sstream>

#include "cosserat2d/optimizer.hpp"
#include "cosserat2d/reduction.hpp"
#include "cosserat2d/shear.hpp"

namespace cosserat2d {
namespace {

// Rows are written by index, so their order never depends on scheduling.
template <typename Row, typename F>
std::vector<Row> fill_rows(const std::vector<double>& params, Execution exec, const F& make) {
  std::vector<Row> rows(params.size());
  const auto n = static_cast<std::ptrdiff_t>(params.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = make(params[i]);
    return rows;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = make(params[i]);
  return rows;
}

}  // namespace

void Range::validate() const {
  if (!std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step) ||
      !(start < end) || !(step > 0.0)) {
    std::ostringstream msg;
    msg << "invalid range start=" << start << " end=" << end << " step=" << step;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

std::vector<double> Range::values() const {
  validate();
  // tolerate the rounding in (end - start) / step so the end point is kept
  const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

std::vector<BifurcationRow> bifurcation_table(const Range& tr_u, const Weights& w,
                                              Execution exec) {
  const std::vector<double> params = tr_u.values();
  if (params.front() <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, "tr U must be positive");
  }
  const std::optional<double> rho =
      w.regime() == Regime::NonClassical ? std::optional(singular_radius(w)) : std::nullopt;
  return fill_rows<BifurcationRow>(params, exec, [rho](double t) {
    const double beta = rho ? pitchfork_beta(t, *rho) : 0.0;
    return BifurcationRow{t, beta, beta == 0.0 ? 0.0 : -beta};
  });
}

std::vector<ShearRow> shear_sweep(const Range& gamma, Execution exec) {
  return fill_rows<ShearRow>(gamma.values(), exec, [](double g) {
    const ShearSolution sol = shear_solution(g);
    const EnergyLevels levels = critical_energy_levels(simple_shear(g));
    return ShearRow{
        .gamma = g,
        .alpha_p = sol.alpha_p.radians(),
        .alpha_plus = sol.angles.first.radians(),
        .alpha_minus = sol.angles.second.radians(),
        .w1 = levels.w1,
        .w2 = levels.w2,
        .w3 = levels.w3,
    };
  });
}

}  // namespace cosserat2d
