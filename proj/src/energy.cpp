#include "cosserat2d/energy.hpp"

#include <cmath>
#include <sstream>

#include "cosserat2d/matrix_log.hpp"
#include "cosserat2d/optimizer.hpp"
#include "cosserat2d/planar.hpp"
#include "cosserat2d/reduction.hpp"

namespace cosserat2d {
namespace {

// |1|^2 in two dimensions.
constexpr double kIdentityNormSq = 2.0;

// mu |sym(Y) - 1|^2 + muc |skew(Y)|^2 for the micro-stretch Y.
double weighted_microstrain(const Mat2& y, const Weights& w) {
  const double d11 = y.e11() - 1.0;
  const double d22 = y.e22() - 1.0;
  const double sym12 = 0.5 * (y.e12() + y.e21());
  const double skew12 = 0.5 * (y.e12() - y.e21());
  const double sym_sq = d11 * d11 + d22 * d22 + 2.0 * sym12 * sym12;
  const double skew_sq = 2.0 * skew12 * skew12;
  return w.mu() * sym_sq + w.muc() * skew_sq;
}

}  // namespace

const char* to_string(Regime r) noexcept {
  return r == Regime::Classical ? "Classical" : "NonClassical";
}

Weights::Weights(double mu, double muc) : mu_(mu), muc_(muc) {
  if (!std::isfinite(mu) || !std::isfinite(muc) || !(mu > 0.0) || !(muc >= 0.0)) {
    std::ostringstream msg;
    msg << "need mu > 0 and muc >= 0, got (" << mu << ", " << muc << ")";
    throw Error(ErrorKind::InvalidWeights, msg.str());
  }
}

double shear_stretch_energy(const Rotation& r, const Deformation& f, const Weights& w) {
  return weighted_microstrain(transpose_times(r, f.matrix()), w);
}

double energy_expanded(const Rotation& r, const Deformation& f, const Weights& w) {
  const Mat2 y = transpose_times(r, f.matrix());
  const double mu = w.mu();
  const double muc = w.muc();
  return 0.5 * (mu - muc) * trace_of_square(y) - 2.0 * mu * y.trace() +
         0.5 * (mu + muc) * f.matrix().frobenius_sq() + mu * kIdentityNormSq;
}

RingEnergy ring_energy(const Rotation& r, const Deformation& f) {
  const double t = transpose_times(r, f.matrix()).trace();
  return RingEnergy{
      .ring = 0.5 * t * t - 2.0 * t,
      .constant = 0.5 * f.matrix().frobenius_sq() - f.det() + 2.0,
  };
}

double rescaled_energy(const Rotation& r, const Deformation& f, const Weights& w) {
  return singular_radius(w) / w.mu() * shear_stretch_energy(r, f, w);
}

ConstantChain constants_chain(const Deformation& f, const Weights& w) {
  const ReductionData red = reduction_data(f, w);
  const auto first_constant = [](const Mat2& m, double mu, double muc) {
    return 0.5 * (mu + muc) * m.frobenius_sq() + mu * kIdentityNormSq;
  };
  const double c1 = first_constant(f.matrix(), w.mu(), w.muc());
  const double c2 = red.rho / w.mu() * c1;
  const double c3 = c2 - red.rho * red.rho;
  // the same chain for (mu, muc) = (1, 0) at F~, where rho = 2
  const double c3_ref = 2.0 * first_constant(red.ftilde.matrix(), 1.0, 0.0) - 4.0;
  const double c4 = c3 - red.lambda * red.lambda * c3_ref;
  return ConstantChain{c1, c2, c3, c4};
}

ReducedEnergy reduced_energy(const Deformation& f, const Weights& w) {
  const MinimizerSet opt = optimal_set(f, w);
  return ReducedEnergy{
      .value = opt.energy,
      .branch = opt.branch == Branch::Pitchfork ? Regime::NonClassical : Regime::Classical,
  };
}

double reduced_energy_sv(const SingularPair& sp) {
  const double s1 = sp.sigma1();
  const double s2 = sp.sigma2();
  if (s1 + s2 < 2.0) {
    return (s1 - 1.0) * (s1 - 1.0) + (s2 - 1.0) * (s2 - 1.0);
  }
  return 0.5 * (s1 - s2) * (s1 - s2);
}

double cofactor_energy(const Rotation& r, const Deformation& f, const Weights& w) {
  return weighted_microstrain(cofactor(transpose_times(r, f.matrix())), w);
}

std::optional<double> try_log_strain_energy(const Rotation& r, const Deformation& f,
                                            const Weights& w) {
  const auto l = try_principal_log(transpose_times(r, f.matrix()));
  if (!l) return std::nullopt;
  const double sym12 = 0.5 * (l->e12() + l->e21());
  const double skew12 = 0.5 * (l->e12() - l->e21());
  const double sym_sq = l->e11() * l->e11() + l->e22() * l->e22() + 2.0 * sym12 * sym12;
  const double skew_sq = 2.0 * skew12 * skew12;
  return w.mu() * sym_sq + w.muc() * skew_sq;
}

double log_strain_energy(const Rotation& r, const Deformation& f, const Weights& w) {
  if (auto e = try_log_strain_energy(r, f, w)) return *e;
  throw Error(ErrorKind::LogUndefined, "R^T F has no principal logarithm");
}

}  // namespace cosserat2d
