#include "cosserat2d/reduction.hpp"

#include "cosserat2d/planar.hpp"

namespace cosserat2d {

Regime classify(const Weights& w) noexcept { return w.regime(); }

double scaling_parameter(const Weights& w) {
  if (w.regime() != Regime::NonClassical) {
    throw Error(ErrorKind::RequiresNonClassical, "rescaling needs mu > muc");
  }
  return w.mu() / (w.mu() - w.muc());
}

double singular_radius(const Weights& w) { return 2.0 * scaling_parameter(w); }

ReductionData reduction_data(const Deformation& f, const Weights& w) {
  const double lambda = scaling_parameter(w);
  const Mat2& m = f.matrix();
  return ReductionData{
      .rho = 2.0 * lambda,
      .lambda = lambda,
      .ftilde = Deformation(Mat2(m.e11() / lambda, m.e12() / lambda, m.e21() / lambda,
                                 m.e22() / lambda)),
  };
}

double rescaled_stretch_trace(const Deformation& f, const Weights& w) {
  return stretch_trace(f) / scaling_parameter(w);
}

}  // namespace cosserat2d
