#include <cmath>
#include <random>

#include "doctest.h"

#include "pentamod/curves.hpp"
#include "pentamod/membership.hpp"
#include "pentamod/pentagon.hpp"
#include "pentamod/regions.hpp"

using namespace pentamod;

namespace {

UnitVec in_chart(int n, ChartId chart, double deg, double r) {
  return to_sphere(std::polar(r, deg * kPi / 180.0), chart, n);
}

}  // namespace

TEST_CASE("core regions lie in the moduli") {
  const int n = 3;
  const UnitVec p = in_chart(n, ChartId::A, 90.0, 0.5 / std::sqrt(2.0));
  REQUIRE(region_of(n, p).region == 3);
  CHECK(analytic_in_moduli(n, p));
  CHECK(oracle_in_moduli(n, p));
}

TEST_CASE("the bounding curves are not in the moduli") {
  for (int n : {3, 4, 5}) {
    for (CurveKind kind : {CurveKind::GammaA, CurveKind::GammaB, CurveKind::GammaC_A}) {
      const CurveSpec spec = curve_spec(kind, n);
      const UnitVec p = gamma_point(spec, 0.5 * (spec.theta_min + spec.theta_max)).xi;
      CHECK_FALSE(analytic_in_moduli(n, p));
    }
  }
}

TEST_CASE("a point between the arc and the first curve is inside") {
  const int n = 3;
  const CurveSpec spec = curve_spec(CurveKind::GammaA, n);
  const CurveSample s = gamma_point(spec, 0.75 * kPi);
  const UnitVec p = to_sphere(s.z.z * 0.95, ChartId::A, n);
  REQUIRE(region_of(n, p).region == 5);
  CHECK(analytic_in_moduli(n, p));
  CHECK(oracle_in_moduli(n, p));
  const UnitVec q = to_sphere(s.z.z * 1.05, ChartId::A, n);
  CHECK_FALSE(analytic_in_moduli(n, q));
  CHECK_FALSE(oracle_in_moduli(n, q));
}

TEST_CASE("vertices are excluded") {
  for (int n : {3, 4, 5}) {
    const KeyPoints& k = key_points(n);
    for (const UnitVec& v : {k.A, k.B, k.M, k.C, k.A_prime, k.B_prime}) {
      CHECK_FALSE(analytic_in_moduli(n, v));
      CHECK_FALSE(oracle_in_moduli(n, v));
    }
  }
}

TEST_CASE("analytic and oracle predicates agree on random points") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  for (int n : {3, 4, 5}) {
    int inside = 0;
    for (int i = 0; i < 3000; ++i) {
      const UnitVec p(g(rng), g(rng), g(rng));
      if (distance_to_boundary_loci(n, p) < 1e-6) continue;
      const bool a = analytic_in_moduli(n, p);
      CHECK(a == oracle_in_moduli(n, p));
      inside += a;
    }
    CHECK(inside > 0);
  }
}

TEST_CASE("interior boundary arcs between moduli regions are included") {
  // the arc between the core region 1 and region 5 lies inside the moduli
  const int n = 3;
  const UnitVec p = to_sphere(std::polar(0.1, 2 * kPi / 3), ChartId::A, n);
  const RegionClass rc = region_of(n, p);
  REQUIRE(rc.is_boundary());
  CHECK(analytic_in_moduli(n, p));
  CHECK(oracle_in_moduli(n, p));
}

TEST_CASE("distance to boundary loci vanishes on the loci") {
  const int n = 4;
  CHECK(distance_to_boundary_loci(n, key_points(n).M) < 1e-12);
  const CurveSpec spec = curve_spec(CurveKind::GammaB, n);
  CHECK(distance_to_boundary_loci(n, gamma_point(spec, spec.theta_min + 0.3).xi) < 1e-12);
}
