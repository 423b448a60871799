#include <doctest.h>

#include <cmath>

#include "cosserat2d/oracle.hpp"
#include "cosserat2d/planar.hpp"
#include "cosserat2d/reduction.hpp"
#include "cosserat2d/sampling.hpp"

using namespace cosserat2d;

TEST_CASE("classify") {
  CHECK(classify(Weights(1, 1)) == Regime::Classical);
  CHECK(classify(Weights(1, 0)) == Regime::NonClassical);
  CHECK(classify(Weights(2, 3)) == Regime::Classical);
}

TEST_CASE("reduction_data") {
  const Deformation f(Mat2(1.2, -0.3, 0.8, 0.9));
  const ReductionData a = reduction_data(f, Weights(1, 0));
  CHECK(a.rho == 2.0);
  CHECK(a.lambda == 1.0);
  CHECK(a.ftilde.matrix() == f.matrix());

  const ReductionData b = reduction_data(f, Weights(1, 0.5));
  CHECK(b.lambda == doctest::Approx(2.0));
  CHECK(b.rho == doctest::Approx(4.0));
  CHECK(max_abs_diff(b.ftilde.matrix(), 0.5 * f.matrix()) <= 1e-16);

  const ReductionData c = reduction_data(f, Weights(3, 1));
  CHECK(c.lambda == doctest::Approx(1.5));
  CHECK(c.rho == doctest::Approx(3.0));

  Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    const Deformation g = random_deformation(rng);
    const Weights w = random_nonclassical_weights(rng);
    const ReductionData r = reduction_data(g, w);
    CHECK(r.rho == 2.0 * r.lambda);
    CHECK(r.lambda >= 1.0);
    CHECK(r.lambda == doctest::Approx(w.mu() / (w.mu() - w.muc())));
    CHECK(r.ftilde.det() > 0.0);
    CHECK(max_abs_diff(r.ftilde.matrix(), (1.0 / r.lambda) * g.matrix()) <= 1e-15);
    // the polar factor survives the rescaling
    CHECK(max_abs_diff(polar_rotation(r.ftilde).matrix(), polar_rotation(g).matrix()) <= 1e-12);
  }

  for (const Weights& w : {Weights(1, 1), Weights(1, 2)}) {
    try {
      reduction_data(f, w);
      FAIL("expected RequiresNonClassical");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RequiresNonClassical);
    }
  }
}

TEST_CASE("rescaled_stretch_trace") {
  CHECK(rescaled_stretch_trace(Deformation(Mat2::diag(3, 3)), Weights(1, 0.5)) ==
        doctest::Approx(3.0));
  CHECK(rescaled_stretch_trace(Deformation::identity(), Weights(1, 0)) == 2.0);
  CHECK(rescaled_stretch_trace(Deformation(Mat2::diag(0.5, 0.5)), Weights(1, 0)) == 1.0);

  Rng rng(52);
  for (int i = 0; i < 1000; ++i) {
    const Deformation f = random_deformation(rng);
    const Weights w = random_nonclassical_weights(rng);
    const ReductionData r = reduction_data(f, w);
    const double scaled = rescaled_stretch_trace(f, w);
    CHECK(scaled == doctest::Approx(stretch_trace(r.ftilde)).epsilon(1e-13));
    if (std::abs(stretch_trace(f) - r.rho) > 1e-9) {
      CHECK((stretch_trace(f) >= r.rho) == (stretch_trace(r.ftilde) >= 2.0));
    }
  }
  CHECK_THROWS_AS(rescaled_stretch_trace(Deformation::identity(), Weights(1, 1)), Error);
}

TEST_CASE("argmin sets are transported by the rescaling") {
  Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    const Deformation f = random_deformation(rng);
    const Weights w = random_nonclassical_weights(rng);
    const ReductionData r = reduction_data(f, w);
    const GridResult full =
        grid_minimize([&](Angle a) { return shear_stretch_energy(Rotation(a), f, w); });
    const GridResult tilde = grid_minimize(
        [&](Angle a) { return rescaled_energy(Rotation(a), f, w); });
    const GridResult reduced = grid_minimize(
        [&](Angle a) { return shear_stretch_energy(Rotation(a), r.ftilde, Weights(1, 0)); });
    CHECK(set_distance(full.angles(), tilde.angles()) <= 1e-6);
    CHECK(set_distance(full.angles(), reduced.angles()) <= 1e-6);
  }
}

TEST_CASE("classical lower bound mu |R^T F - 1|^2") {
  Rng rng(54);
  for (int i = 0; i < 200; ++i) {
    const Deformation f = random_deformation(rng);
    const Weights w = random_classical_weights(rng);
    const Weights w11(1, 1);
    for (int k = 0; k < 10; ++k) {
      const Rotation r(random_angle(rng));
      CHECK(shear_stretch_energy(r, f, w) >=
            w.mu() * shear_stretch_energy(r, f, w11) - 1e-12);
    }
    const Rotation rp = polar_rotation(f);
    CHECK(shear_stretch_energy(rp, f, w) ==
          doctest::Approx(w.mu() * shear_stretch_energy(rp, f, w11)).epsilon(1e-12));
  }
}
