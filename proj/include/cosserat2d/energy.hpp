#pragma once

#include <optional>

#include "cosserat2d/mat2.hpp"

namespace cosserat2d {

enum class Regime { Classical, NonClassical };

const char* to_string(Regime r) noexcept;

/// Shear modulus mu > 0 and Cosserat couple modulus muc >= 0.
class Weights {
 public:
  Weights(double mu, double muc);

  double mu() const noexcept { return mu_; }
  double muc() const noexcept { return muc_; }

  /// Classical iff muc >= mu.
  Regime regime() const noexcept {
    return muc_ >= mu_ ? Regime::Classical : Regime::NonClassical;
  }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  double mu_;
  double muc_;
};

/// W(R;F) = mu |sym(R^T F - 1)|^2 + muc |skew(R^T F - 1)|^2.
double shear_stretch_energy(const Rotation& r, const Deformation& f, const Weights& w);

/// Same energy as the sum of its R-dependent traces and the constant c1:
/// (mu-muc)/2 tr((R^T F)^2) - 2 mu tr(R^T F) + (mu+muc)/2 |F|^2 + 2 mu.
double energy_expanded(const Rotation& r, const Deformation& f, const Weights& w);

/// Split of W_{1,0} into the R-dependent part and the constant.
struct RingEnergy {
  double ring;      ///< 1/2 (tr R^T F)^2 - 2 tr R^T F
  double constant;  ///< 1/2 |F|^2 - det F + 2
};

RingEnergy ring_energy(const Rotation& r, const Deformation& f);

/// (rho/mu) W(R;F). Requires mu > muc.
double rescaled_energy(const Rotation& r, const Deformation& f, const Weights& w);

/// Constants collected while reducing W_{mu,muc}(R;F) to W_{1,0}(R;F~).
/// c4 is the offset in W~_{mu,muc}(R;F) = lambda^2 W~_{1,0}(R;F~) + c4.
struct ConstantChain {
  double c1;  ///< (mu+muc)/2 |F|^2 + 2 mu
  double c2;  ///< (rho/mu) c1
  double c3;  ///< c2 - rho^2
  double c4;  ///< c3 - lambda^2 c3_{1,0}(F~)
};

ConstantChain constants_chain(const Deformation& f, const Weights& w);

/// Critical energy values of W_{1,0}(.;F). w3 exists iff tr U >= 2.
struct EnergyLevels {
  double w1;
  double w2;
  std::optional<double> w3;
};

struct ReducedEnergy {
  double value;
  Regime branch;
};

/// min over R of W_{mu,muc}(R;F). The branch is NonClassical exactly when
/// mu > muc and tr U >= rho. Evaluated at the closed-form optimal set.
ReducedEnergy reduced_energy(const Deformation& f, const Weights& w);

/// Reduced W_{1,0} in singular values:
/// (s1-1)^2 + (s2-1)^2 if s1+s2 < 2, else (s1-s2)^2 / 2.
double reduced_energy_sv(const SingularPair& sp);

/// mu |sym(cof(R^T F) - 1)|^2 + muc |skew(cof(R^T F) - 1)|^2.
double cofactor_energy(const Rotation& r, const Deformation& f, const Weights& w);

/// mu |sym log(R^T F)|^2 + muc |skew log(R^T F)|^2 with the principal log.
/// Throws LogUndefined when R^T F has spectrum on (-inf, 0].
double log_strain_energy(const Rotation& r, const Deformation& f, const Weights& w);

std::optional<double> try_log_strain_energy(const Rotation& r, const Deformation& f,
                                            const Weights& w);

}  // namespace cosserat2d
