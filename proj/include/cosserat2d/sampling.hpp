#pragma once

#include <cstdint>
#include <random>

#include "cosserat2d/energy.hpp"

namespace cosserat2d {

using Rng = std::mt19937_64;

/// Entries uniform in [-2, 2], rejected unless det F >= 0.05.
Deformation random_deformation(Rng& rng);

/// As random_deformation, additionally rejecting condition number > max_cond.
Deformation random_well_conditioned_deformation(Rng& rng, double max_cond);

/// mu in [0.2, 5], muc in [0, mu) with mu > muc.
Weights random_nonclassical_weights(Rng& rng);

/// mu in [0.2, 5], muc in [mu, mu + 5].
Weights random_classical_weights(Rng& rng);

Angle random_angle(Rng& rng);

/// sigma1 / sigma2.
double condition_number(const Deformation& f);

}  // namespace cosserat2d
