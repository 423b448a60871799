#include "cosserat2d/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cosserat2d/energy.hpp"
#include "cosserat2d/optimizer.hpp"
#include "cosserat2d/oracle.hpp"
#include "cosserat2d/planar.hpp"
#include "cosserat2d/reduction.hpp"
#include "cosserat2d/sampling.hpp"
#include "cosserat2d/shear.hpp"

namespace cosserat2d {
namespace {

class Tally {
 public:
  Tally(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

  void add(double residual) {
    // NaN must fail the property
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    worst_ = std::max(worst_, residual);
    ++count_;
  }

  PropertyCheck finish() const { return {name_, worst_, tol_, count_, worst_ <= tol_}; }

 private:
  std::string name_;
  double tol_;
  double worst_ = 0.0;
  std::size_t count_ = 0;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Weights random_weights(Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  return coin(rng) ? random_nonclassical_weights(rng) : random_classical_weights(rng);
}

// Eigenvalue sum of sqrt(F^T F) from the symmetric 2x2 eigenproblem.
double stretch_trace_by_eigen(const Mat2& f) {
  const Mat2 c = f.transpose() * f;
  const double mean = 0.5 * (c.e11() + c.e22());
  const double radius = std::hypot(0.5 * (c.e11() - c.e22()), c.e12());
  return std::sqrt(mean + radius) + std::sqrt(std::max(0.0, mean - radius));
}

}  // namespace

std::vector<PropertyCheck> run_verification(const VerifyOptions& opts) {
  Rng rng(opts.seed);
  const std::size_t n = std::max<std::size_t>(opts.samples, 1);
  const std::size_t n_oracle = std::max<std::size_t>(n / 10, 1);
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  std::vector<PropertyCheck> out;

  {
    Tally ch("cayley_hamilton_trace", 1e-10);
    Tally eig("stretch_trace_vs_eigen", 1e-9);
    Tally pyth("trace_pythagoras", 1e-10);
    Tally recon("polar_reconstruction", 1e-10);
    Tally symm("stretch_symmetry", 1e-12);
    Tally scal("polar_scale_invariance", 1e-12);
    Tally svd("singular_value_products", 1e-10);
    for (std::size_t i = 0; i < n; ++i) {
      const Mat2 x(unit(rng), unit(rng), unit(rng), unit(rng));
      ch.add(rel((x * x).trace(), trace_of_square(x)));

      const Deformation f = random_deformation(rng);
      const TraceInvariants inv = trace_invariants(f);
      eig.add(rel(inv.tr_u, stretch_trace_by_eigen(f.matrix())));
      pyth.add(rel(inv.tr_f * inv.tr_f + inv.tr_jf * inv.tr_jf, inv.tr_u * inv.tr_u));

      const PolarDecomposition pd = polar_decompose(f);
      recon.add(max_abs_diff(pd.rotation.matrix() * pd.stretch, f.matrix()));
      symm.add(std::abs(pd.stretch.e12() - pd.stretch.e21()));
      scal.add(angular_distance(polar_angle(f.scaled(scale(rng))), pd.alpha_p));

      const SingularPair sp = singular_values(f);
      svd.add(std::max(rel(sp.sigma1() * sp.sigma2(), inv.det_f),
                       rel(sp.sigma1() * sp.sigma1() + sp.sigma2() * sp.sigma2(),
                           inv.frob_f * inv.frob_f)));
    }
    for (const auto* t : {&ch, &eig, &pyth, &recon, &symm, &scal, &svd}) out.push_back(t->finish());
  }

  {
    Tally expand("energy_expansion", 1e-10);
    Tally ring("ring_decomposition", 1e-10);
    Tally square("expanding_the_square", 1e-10);
    Tally cof("cofactor_identity", 1e-12);
    Tally defect("microstrain_defect_formula", 1e-10);
    std::uniform_real_distribution<double> rho_dist(0.0, 6.0);
    for (std::size_t i = 0; i < n; ++i) {
      const Deformation f = random_deformation(rng);
      const Rotation r(random_angle(rng));
      const Weights w = random_weights(rng);
      const double e = shear_stretch_energy(r, f, w);
      expand.add(rel(energy_expanded(r, f, w), e));

      const RingEnergy re = ring_energy(r, f);
      ring.add(rel(re.ring + re.constant, shear_stretch_energy(r, f, Weights(1.0, 0.0))));

      const Mat2 y = transpose_times(r, f.matrix());
      const double rho = rho_dist(rng);
      const Mat2 shifted = y - rho * Mat2::identity();
      square.add(rel((shifted * shifted).trace(),
                     (y * y).trace() - 2.0 * rho * y.trace() + 2.0 * rho * rho));

      cof.add(rel(cofactor_energy(r, f, w), shear_stretch_energy(r, cofactor_transform(f), w)));

      const double beta = relative_angle(r.angle(), f).radians();
      defect.add(std::abs(microstrain_symmetry_defect(r, f) -
                          std::abs(std::sin(beta)) * stretch_trace(f) / 2.0));
    }
    for (const auto* t : {&expand, &ring, &square, &cof, &defect}) out.push_back(t->finish());
  }

  {
    Tally order("critical_level_ordering", 1e-12);
    Tally sv("reduced_energy_singular_values", 1e-10);
    Tally dist("reduced_energy_distance_formula", 1e-10);
    Tally sym("pitchfork_energy_symmetry", 1e-12);
    Tally minimal("minimality_over_criticals", 1e-12);
    Tally station("stationarity_vs_finite_difference", 1e-6);
    const Weights w10(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const Deformation f = random_deformation(rng);
      const EnergyLevels lv = critical_energy_levels(f);
      double bad = std::max(0.0, lv.w2 - lv.w1);
      if (lv.w3) bad = std::max(bad, *lv.w3 - lv.w2);
      order.add(bad);

      const SingularPair sp = singular_values(f);
      sv.add(std::abs(reduced_energy(f, w10).value - reduced_energy_sv(sp)));
      const double d1 = sp.sigma1() - 1.0;
      const double d2 = sp.sigma2() - 1.0;
      dist.add(std::abs(reduced_energy(f, Weights(1.0, 1.0)).value - (d1 * d1 + d2 * d2)));

      const Weights w = random_nonclassical_weights(rng);
      const MinimizerSet opt = optimal_set(f, w);
      sym.add(std::abs(shear_stretch_energy(Rotation(opt.alpha_plus), f, w) -
                       shear_stretch_energy(Rotation(opt.alpha_minus), f, w)));

      const MinimizerSet opt10 = optimal_set(f, w10);
      const CriticalSet cs = critical_set(f);
      std::vector<Angle> crit{cs.classical_pair.first, cs.classical_pair.second};
      if (cs.nonclassical) {
        crit.push_back(cs.nonclassical->first);
        crit.push_back(cs.nonclassical->second);
      }
      for (Angle a : crit) {
        minimal.add(std::max(0.0, opt10.energy - shear_stretch_energy(Rotation(a), f, w10)));
      }

      const Angle a = random_angle(rng);
      const double step = 1e-5;
      const double fd = (shear_stretch_energy(Rotation(Angle(a.radians() + step)), f, w10) -
                         shear_stretch_energy(Rotation(Angle(a.radians() - step)), f, w10)) /
                        (2.0 * step);
      station.add(std::abs(stationarity_residual(a, f) - fd));
    }
    for (const auto* t : {&order, &sv, &dist, &sym, &minimal, &station}) out.push_back(t->finish());
  }

  {
    Tally affine("rescaling_affine_offset", 1e-9);
    Tally oracle("oracle_agreement", 1e-6);
    Tally oracle_energy("oracle_minimal_energy", 1e-9);
    for (std::size_t i = 0; i < n_oracle; ++i) {
      const Deformation f = random_deformation(rng);
      const Weights w = random_nonclassical_weights(rng);
      const ReductionData red = reduction_data(f, w);
      const ConstantChain chain = constants_chain(f, w);
      for (int k = 0; k < 10; ++k) {
        const Rotation r(random_angle(rng));
        const double offset = rescaled_energy(r, f, w) -
                              red.lambda * red.lambda *
                                  rescaled_energy(r, red.ftilde, Weights(1.0, 0.0));
        affine.add(std::abs(offset - chain.c4) / std::max(1.0, std::abs(chain.c4)));
      }

      const Weights wo = (i % 2 == 0) ? w : random_classical_weights(rng);
      const MinimizerSet opt = optimal_set(f, wo);
      std::vector<Angle> closed = opt.angles();
      if (opts.inject_fault) {
        for (Angle& a : closed) a = Angle(a.radians() + 1e-3);
      }
      const GridResult res = grid_minimize(
          [&](Angle a) { return shear_stretch_energy(Rotation(a), f, wo); });
      oracle.add(set_distance(closed, res.angles()));
      oracle_energy.add(rel(res.best_value(), opt.energy));
    }
    for (const auto* t : {&affine, &oracle, &oracle_energy}) out.push_back(t->finish());
  }

  {
    Tally arctan("shear_arctan_identity", 1e-12);
    Tally levels("shear_levels_two_ways", 1e-10);
    Tally energy("shear_energy", 1e-12);
    const Weights w10(1.0, 0.0);
    for (int k = -1000; k <= 1000; ++k) {
      const double g = 0.01 * k;
      const double sgn = (g > 0) - (g < 0);
      arctan.add(std::abs(std::atan(g / 2.0) - sgn * std::acos(2.0 / std::sqrt(4.0 + g * g))));

      const Deformation f = simple_shear(g);
      const EnergyLevels lv = critical_energy_levels(f);
      const CriticalSet cs = critical_set(f);
      levels.add(std::max({
          std::abs(lv.w1 - shear_stretch_energy(Rotation(cs.classical_pair.second), f, w10)),
          std::abs(lv.w2 - shear_stretch_energy(Rotation(cs.classical_pair.first), f, w10)),
          std::abs(*lv.w3 - shear_stretch_energy(Rotation(cs.nonclassical->first), f, w10)),
      }));
      energy.add(std::abs(shear_solution(g).energy - 0.5 * g * g));
    }
    for (const auto* t : {&arctan, &levels, &energy}) out.push_back(t->finish());
  }

  return out;
}

}  // namespace cosserat2d
