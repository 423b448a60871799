#include "cosserat2d/sampling.hpp"

#include <numbers>

#include "cosserat2d/planar.hpp"

namespace cosserat2d {

Deformation random_deformation(Rng& rng) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (;;) {
    const double a = entry(rng);
    const double b = entry(rng);
    const double c = entry(rng);
    const double d = entry(rng);
    if (a * d - b * c >= 0.05) return Deformation(a, b, c, d);
  }
}

double condition_number(const Deformation& f) {
  const SingularPair sp = singular_values(f);
  return sp.sigma1() / sp.sigma2();
}

Deformation random_well_conditioned_deformation(Rng& rng, double max_cond) {
  for (;;) {
    Deformation f = random_deformation(rng);
    if (condition_number(f) <= max_cond) return f;
  }
}

Weights random_nonclassical_weights(Rng& rng) {
  std::uniform_real_distribution<double> mu_dist(0.2, 5.0);
  std::uniform_real_distribution<double> frac(0.0, 0.95);
  const double mu = mu_dist(rng);
  return Weights(mu, frac(rng) * mu);
}

Weights random_classical_weights(Rng& rng) {
  std::uniform_real_distribution<double> mu_dist(0.2, 5.0);
  std::uniform_real_distribution<double> extra(0.0, 5.0);
  const double mu = mu_dist(rng);
  return Weights(mu, mu + extra(rng));
}

Angle random_angle(Rng& rng) {
  std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
  return Angle(dist(rng));
}

}  // namespace cosserat2d
