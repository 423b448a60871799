#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cosserat2d/planar.hpp"
#include "cosserat2d/sampling.hpp"
#include "cosserat2d/shear.hpp"
#include "oracles.hpp"

using namespace cosserat2d;
using std::numbers::pi;
using std::sqrt;

namespace {

void check_invariants(const TraceInvariants& inv, double tr_f, double tr_jf, double tr_u,
                      double det_f, double frob_f) {
  CHECK(inv.tr_f == doctest::Approx(tr_f).epsilon(1e-14));
  CHECK(inv.tr_jf == doctest::Approx(tr_jf).epsilon(1e-14));
  CHECK(inv.tr_u == doctest::Approx(tr_u).epsilon(1e-14));
  CHECK(inv.det_f == doctest::Approx(det_f).epsilon(1e-14));
  CHECK(inv.frob_f == doctest::Approx(frob_f).epsilon(1e-14));
}

}  // namespace

TEST_CASE("Angle normalization") {
  CHECK(Angle(pi).radians() == pi);
  CHECK(Angle(-pi).radians() == pi);
  CHECK(Angle(3 * pi).radians() == doctest::Approx(pi));
  CHECK(Angle(0.25 + 4 * pi).radians() == doctest::Approx(0.25));
  Rng rng(3);
  std::uniform_real_distribution<double> wide(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = wide(rng);
    const double once = Angle::normalize(x);
    CHECK(Angle::normalize(once) == once);
    CHECK(once > -pi);
    CHECK(once <= pi);
  }
  CHECK(angular_distance(Angle(pi - 1e-3), Angle(-pi + 1e-3)) == doctest::Approx(2e-3));
}

TEST_CASE("Mat2 and membership checks") {
  CHECK_THROWS_AS(Mat2(std::nan(""), 0, 0, 1), Error);
  try {
    Mat2(INFINITY, 0, 0, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteEntry);
  }
  for (const Mat2& bad : {Mat2(1, 0, 0, -1), Mat2(0, 0, 0, 0), Mat2(1, 2, 2, 4)}) {
    try {
      Deformation f(bad);
      FAIL("expected NonPositiveDeterminant");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPositiveDeterminant);
    }
  }
  try {
    Rotation::from_matrix(Mat2::diag(1.0, 1.0 + 1e-9));
    FAIL("expected NotARotation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotARotation);
  }
  CHECK_THROWS_AS(Rotation::from_matrix(Mat2::diag(-1.0, 1.0)), Error);
  const Rotation r = Rotation::from_matrix(rotation(Angle(0.4)).matrix());
  CHECK(r.angle().radians() == doctest::Approx(0.4));
}

TEST_CASE("trace_invariants") {
  check_invariants(trace_invariants(Deformation::identity()), 2, 0, 2, 1, sqrt(2.0));
  check_invariants(trace_invariants(Deformation(Mat2::diag(3, 1))), 4, 0, 4, 3, sqrt(10.0));

  const Deformation shear(1, 2, 0, 1);
  check_invariants(trace_invariants(shear), 2, 2, 2 * sqrt(2.0), 1, sqrt(6.0));
  CHECK(testing::stretch_trace_eigen(shear.matrix()) == doctest::Approx(2 * sqrt(2.0)));
}

TEST_CASE("trace identities on random GL+(2)") {
  Rng rng(11);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 x(entry(rng), entry(rng), entry(rng), entry(rng));
    const double direct = (x * x).trace();
    CHECK(std::abs(direct - trace_of_square(x)) <= 1e-10 * std::max(1.0, std::abs(direct)));

    const Deformation f = random_deformation(rng);
    const TraceInvariants inv = trace_invariants(f);
    CHECK(inv.tr_u > 0.0);
    CHECK(inv.tr_u == doctest::Approx(testing::stretch_trace_eigen(f.matrix())).epsilon(1e-9));
    CHECK(inv.tr_f * inv.tr_f + inv.tr_jf * inv.tr_jf ==
          doctest::Approx(inv.tr_u * inv.tr_u).epsilon(1e-10));
  }
}

TEST_CASE("polar_decompose examples") {
  {
    const auto pd = polar_decompose(Deformation::identity());
    CHECK(pd.alpha_p.radians() == 0.0);
    CHECK(max_abs_diff(pd.rotation.matrix(), Mat2::identity()) == 0.0);
    CHECK(max_abs_diff(pd.stretch, Mat2::identity()) == 0.0);
  }
  {
    const Deformation f(1, 2, 0, 1);
    const auto pd = polar_decompose(f);
    CHECK(pd.alpha_p.radians() == doctest::Approx(-pi / 4).epsilon(1e-14));
    // sin = -2 / (2 sqrt 2), cos = 2 / (2 sqrt 2)
    CHECK(pd.rotation.sin() == doctest::Approx(-1 / sqrt(2.0)));
    CHECK(pd.rotation.cos() == doctest::Approx(1 / sqrt(2.0)));
    const Mat2 u = pd.rotation.matrix().transpose() * f.matrix();
    CHECK(std::abs(u.e12() - u.e21()) <= 1e-12);
  }
  {
    const Deformation f(rotation(Angle(0.7)).matrix() * Mat2::diag(2, 0.5));
    CHECK(polar_decompose(f).alpha_p.radians() == doctest::Approx(0.7).epsilon(1e-13));
  }
}

TEST_CASE("polar_decompose properties") {
  Rng rng(5);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const Deformation f = random_deformation(rng);
    const auto pd = polar_decompose(f);
    const TraceInvariants inv = trace_invariants(f);
    CHECK(max_abs_diff(pd.rotation.matrix() * pd.stretch, f.matrix()) <= 1e-10);
    CHECK(std::abs(pd.stretch.e12() - pd.stretch.e21()) <= 1e-12);
    CHECK(pd.stretch.det() > 0.0);
    CHECK(pd.stretch.trace() > 0.0);  // symmetric with positive trace and det: SPD
    CHECK(std::cos(pd.alpha_p.radians()) == doctest::Approx(inv.tr_f / inv.tr_u));
    CHECK(std::sin(pd.alpha_p.radians()) == doctest::Approx(-inv.tr_jf / inv.tr_u));
    CHECK(angular_distance(polar_angle(f.scaled(scale(rng))), pd.alpha_p) <= 1e-12);
  }
}

TEST_CASE("tr(R(alpha)^T F) = tr U cos(alpha - alpha_p)") {
  // The expansion tr F cos(alpha) - tr JF sin(alpha) is the one that holds;
  // checked against direct multiplication.
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Deformation f = random_deformation(rng);
    const Angle a = random_angle(rng);
    const double direct = (rotation(a).matrix().transpose() * f.matrix()).trace();
    const double closed = stretch_trace(f) * std::cos(a.radians() - polar_angle(f).radians());
    CHECK(std::abs(direct - closed) <= 1e-12);
  }
}

TEST_CASE("singular_values") {
  const SingularPair d = singular_values(Deformation(Mat2::diag(3, 1)));
  CHECK(d.sigma1() == doctest::Approx(3.0));
  CHECK(d.sigma2() == doctest::Approx(1.0));

  const SingularPair s = singular_values(Deformation(1, 2, 0, 1));
  CHECK(s.sigma1() == doctest::Approx(sqrt(2.0) + 1));
  CHECK(s.sigma2() == doctest::Approx(sqrt(2.0) - 1));
  CHECK(s.sigma1() * s.sigma2() == doctest::Approx(1.0).epsilon(1e-14));

  const SingularPair i = singular_values(Deformation::identity());
  CHECK(i.sigma1() == 1.0);
  CHECK(i.sigma2() == 1.0);

  Rng rng(8);
  for (int k = 0; k < 500; ++k) {
    const Deformation f = random_deformation(rng);
    const SingularPair sp = singular_values(f);
    CHECK(sp.sigma1() >= sp.sigma2());
    CHECK(std::abs(sp.sigma1() * sp.sigma2() - f.det()) <= 1e-10);
    CHECK(std::abs(sp.sigma1() * sp.sigma1() + sp.sigma2() * sp.sigma2() -
                   f.matrix().frobenius_sq()) <= 1e-10);
    CHECK(sp.sigma1() + sp.sigma2() == doctest::Approx(stretch_trace(f)));
  }
  CHECK_THROWS_AS(SingularPair(1.0, 0.0), Error);
  CHECK(SingularPair(1.0, 3.0) == SingularPair(3.0, 1.0));
}

TEST_CASE("rotation") {
  CHECK(max_abs_diff(rotation(Angle(0.0)).matrix(), Mat2::identity()) == 0.0);
  CHECK(max_abs_diff(rotation(Angle(pi / 2)).matrix(), Mat2::quarter_turn()) <= 1e-16);
  CHECK(max_abs_diff(rotation(Angle(pi)).matrix(), rotation(Angle(-pi)).matrix()) == 0.0);
  CHECK(max_abs_diff(rotation(Angle(pi)).matrix(), Mat2::diag(-1, -1)) <= 1e-15);
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Mat2 r = rotation(random_angle(rng)).matrix();
    CHECK((r.transpose() * r - Mat2::identity()).frobenius() <= 1e-15);
    CHECK(std::abs(r.det() - 1.0) <= 1e-15);
  }
}

TEST_CASE("cofactor_transform") {
  CHECK(cofactor_transform(Deformation::identity()).matrix() == Mat2::identity());
  const Deformation d(Mat2::diag(2, 3));
  CHECK(cofactor_transform(d).matrix() == Mat2::diag(3, 2));
  CHECK(max_abs_diff(cofactor_transform(d).matrix() * d.matrix().transpose(),
                     d.det() * Mat2::identity()) == 0.0);

  const double gamma = 1.7;
  const Deformation fg = simple_shear(gamma);
  // det F_gamma * F_gamma^{-1} = (1 -gamma; 0 1); transposed (1 0; -gamma 1)
  const Mat2 expected = (fg.det() * testing::inverse(fg.matrix())).transpose();
  CHECK(max_abs_diff(cofactor_transform(fg).matrix(), expected) <= 1e-15);
  CHECK(max_abs_diff(cofactor_transform(fg).matrix(), Mat2(1, 0, -gamma, 1)) == 0.0);

  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Deformation f = random_deformation(rng);
    const Deformation unimodular(Mat2((1.0 / std::sqrt(f.det())) * f.matrix()));
    CHECK(max_abs_diff(cofactor_transform(cofactor_transform(unimodular)).matrix(),
                       unimodular.matrix()) <= 1e-10);
    CHECK(cofactor_transform(f).det() > 0.0);
  }
}

TEST_CASE("relative_angle") {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const Deformation f = random_deformation(rng);
    CHECK(relative_angle(polar_angle(f), f).radians() == 0.0);
    const Angle a = random_angle(rng);
    const Mat2 lhs = rotation(relative_angle(a, f)).matrix();
    const Mat2 rhs = rotation(a).matrix().transpose() * polar_rotation(f).matrix();
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
  }
  CHECK(relative_angle(Angle(0.3), Deformation::identity()).radians() ==
        doctest::Approx(-0.3));
  CHECK(relative_angle(Angle(0.0), Deformation(1, 2, 0, 1)).radians() ==
        doctest::Approx(-pi / 4));
}
