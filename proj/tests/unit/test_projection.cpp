#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "pentamod/error.hpp"
#include "pentamod/projection.hpp"

using namespace pentamod;
using doctest::Approx;

namespace {

bool near(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("solid constants match the closed forms") {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
  struct Row {
    int n;
    double d_AB, d_AM, d_BM, lA, lB, lC;
  };
  const Row rows[] = {
      {3, 1 / r2, (r3 - 1) / r2, (r3 - 1) / r2, 1 / (4 * r2), 1 / (4 * r2), 1 / (2 * r2)},
      {4, (r3 - 1) / r2, r3 - r2, r2 - 1, 1 / (2 * r2), 0.5, 1 / r2},
      {5, 0.25 * (std::sqrt(30 + 6 * r5) - r5 - 3), 0.5 * (std::sqrt(15.0) - r5 + r3 - 3),
       0.5 * (std::sqrt(10 + 2 * r5) - r5 - 1), (r5 + 3) / 8, (r5 + 2) / 4, (r5 + 3) / 4},
  };
  for (const Row& row : rows) {
    CAPTURE(row.n);
    const SolidConstants& c = solid_constants(row.n);
    CHECK(c.d_AB == Approx(row.d_AB).epsilon(1e-12));
    CHECK(c.d_AM == Approx(row.d_AM).epsilon(1e-12));
    CHECK(c.d_BM == Approx(row.d_BM).epsilon(1e-12));
    CHECK(c.lambda_A == Approx(row.lA).epsilon(1e-12));
    CHECK(c.lambda_B == Approx(row.lB).epsilon(1e-12));
    CHECK(c.lambda_C == Approx(row.lC).epsilon(1e-12));
    CHECK(std::abs(tan_equation_residual(c)) < 1e-12);

    const oracle::Constants o = oracle::constants(row.n);
    CHECK(c.d_AB == Approx(o.d_AB).epsilon(1e-12));
    CHECK(c.d_AM == Approx(o.d_AM).epsilon(1e-12));
    CHECK(c.d_BM == Approx(o.d_BM).epsilon(1e-12));
    CHECK(c.lambda_C == Approx(o.lambda_C).epsilon(1e-12));
  }
  CHECK(solid_constants(3).N == 4);
  CHECK(solid_constants(4).N == 8);
  CHECK(solid_constants(5).N == 20);
  CHECK(solid_constants(3).d_AB == Approx(0.7071067812));
  CHECK(solid_constants(4).lambda_B == 0.5);
  CHECK(solid_constants(5).lambda_C == Approx(1.3090169944));
}

TEST_CASE("unsupported solid") {
  for (int n : {2, 6}) {
    try {
      solid_constants(n);
      FAIL("expected UnsupportedSolid");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedSolid);
    }
  }
}

TEST_CASE("stereographic chart maps") {
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    const KeyPoints& k = key_points(n);
    const SolidConstants& c = solid_constants(n);
    CHECK(angular_distance(to_sphere(0.0, ChartId::M, n), k.M) < 1e-15);
    CHECK(angular_distance(to_sphere(-c.d_AM, ChartId::M, n), k.A) < 1e-12);
    CHECK(near(to_chart(k.B, ChartId::M, n).z, Complex(0, -c.d_BM)));
    CHECK(near(to_chart(k.A, ChartId::A, n).z, 0.0));
    CHECK(near(to_chart(k.B, ChartId::B, n).z, 0.0));

    // the unit circle is the chart equator
    const ChartFrame& f = chart_frame(n, ChartId::A);
    const UnitVec e = to_sphere(std::polar(1.0, 0.4), ChartId::A, n);
    CHECK(std::abs(dot(e, f.e3)) < 1e-15);

    // every chart pair round-trips
    const UnitVec p(0.3, -0.2, 0.5);
    for (ChartId ch : {ChartId::A, ChartId::B, ChartId::M}) {
      CHECK(angular_distance(to_sphere(to_chart(p, ch, n)), p) < 1e-14);
    }

    // arc lengths from chart radii
    CHECK(angular_distance(k.A, k.B) == Approx(2 * std::atan(c.d_AB)).epsilon(1e-13));
    CHECK(angular_distance(k.A, k.M) == Approx(2 * std::atan(c.d_AM)).epsilon(1e-13));
    CHECK(angular_distance(k.B, k.M) == Approx(2 * std::atan(c.d_BM)).epsilon(1e-13));
  }
  CHECK(std::abs(to_chart(key_points(3).B, ChartId::M, 3).z -
                 Complex(0, -(std::sqrt(3.0) - 1) / std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("antipode of the chart origin has no chart coordinate") {
  try {
    to_chart(-key_points(3).A, ChartId::A, 3);
    FAIL("expected AntipodeOfOrigin");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AntipodeOfOrigin);
  }
}

TEST_CASE("key points") {
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    const KeyPoints& k = key_points(n);
    const SolidConstants& c = solid_constants(n);
    const double ab = angular_distance(k.A, k.B);
    CHECK(angular_distance(k.A, k.B_prime) == Approx(ab).epsilon(1e-13));
    CHECK(angular_distance(k.B, k.A_prime) == Approx(ab).epsilon(1e-13));
    CHECK(near(to_chart(k.B_prime, ChartId::A, n).z, std::polar(c.d_AB, 2 * kPi / 3)));
    CHECK(near(to_chart(k.A_prime, ChartId::B, n).z,
               std::polar(c.d_AB, (1.0 - 2.0 / n) * kPi)));
    CHECK(near(to_chart(k.C, ChartId::A, n).z, std::polar(c.d_AM, -kPi / 3)));
    // C is the mirror image of M across AB
    CHECK(angular_distance(k.B, k.C) == Approx(angular_distance(k.B, k.M)).epsilon(1e-13));
  }
}

TEST_CASE("chart rotation acts as multiplication by a unit complex number") {
  const int n = 5;
  for (ChartId ch : {ChartId::A, ChartId::B, ChartId::M}) {
    const Complex z(0.3, 0.8);
    const UnitVec p = rotate(to_sphere(z, ch, n), chart_rotation(n, ch, 0.9));
    CHECK(near(to_chart(p, ch, n).z, z * std::polar(1.0, 0.9)));
  }
}

TEST_CASE("Mobius maps between charts") {
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    const SolidConstants& c = solid_constants(n);
    const MobiusMap m2a = mobius_M_to_A(n);
    const MobiusMap m2b = mobius_M_to_B(n);
    CHECK(near(m2a.apply(-c.d_AM).z, 0.0));
    CHECK(near(m2a.apply(0.0).z, std::polar(c.d_AM, kPi / 3)));
    CHECK(m2a.apply(1.0 / c.d_AM).infinite);
    CHECK(near(m2b.apply(Complex(0, -c.d_BM)).z, 0.0));
    CHECK(near(m2b.apply(0.0).z, std::polar(c.d_BM, (1.0 - 1.0 / n) * kPi)));

    // the maps agree with going through the sphere
    for (Complex z : {Complex(0.2, -0.1), Complex(-0.4, 0.3), Complex(1.5, 0.7)}) {
      const UnitVec p = to_sphere(z, ChartId::M, n);
      CHECK(near(m2a.apply(z).z, to_chart(p, ChartId::A, n).z, 1e-12));
      CHECK(near(m2b.apply(z).z, to_chart(p, ChartId::B, n).z, 1e-12));
      CHECK(near(m2a.inverse().apply(m2a.apply(z)).z, z, 1e-12));
    }
  }
  const Complex z(0.25, -0.5);
  CHECK(MobiusMap::identity().apply(z).z == z);
  CHECK(MobiusMap::identity().apply(ExtComplex::infinity()).infinite);
  CHECK_THROWS_AS(MobiusMap(1.0, 2.0, 2.0, 4.0), Error);
}
