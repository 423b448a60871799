#pragma once

#include "cosserat2d/energy.hpp"

namespace cosserat2d {

Regime classify(const Weights& w) noexcept;

/// Rescaling data for mu > muc.
struct ReductionData {
  double rho;     ///< singular radius 2 mu / (mu - muc), threshold on tr U
  double lambda;  ///< mu / (mu - muc) = rho / 2
  Deformation ftilde;  ///< F / lambda
};

/// Throws RequiresNonClassical if muc >= mu.
ReductionData reduction_data(const Deformation& f, const Weights& w);

/// lambda = mu / (mu - muc); rho = 2 lambda. Both throw RequiresNonClassical.
double scaling_parameter(const Weights& w);
double singular_radius(const Weights& w);

/// tr U~ = tr U / lambda; tr U >= rho iff tr U~ >= 2.
double rescaled_stretch_trace(const Deformation& f, const Weights& w);

}  // namespace cosserat2d
