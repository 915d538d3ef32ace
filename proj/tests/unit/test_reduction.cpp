#include <cmath>

#include "doctest.h"

#include "pentamod/error.hpp"
#include "pentamod/membership.hpp"
#include "pentamod/pentagon.hpp"
#include "pentamod/reduction.hpp"

using namespace pentamod;
using doctest::Approx;

namespace {

/// Edge lengths a, b, c of the pentagon anchored at V. The edge c runs
/// W -> C -> E with C at its midpoint.
struct Lengths {
  double a, b, c;
};

Lengths lengths(int n, const UnitVec& V) {
  const Pentagon p = anchor_pentagon(n, V);
  return {angular_distance(p.V, p.A), angular_distance(p.V, p.B),
          angular_distance(p.W, p.C) + angular_distance(p.C, p.E)};
}

double reduction_gap(ReductionKind kind, int n, const UnitVec& V) {
  const Lengths l = lengths(n, V);
  switch (kind) {
    case ReductionKind::AB: return l.a - l.b;
    case ReductionKind::AC: return l.a - l.c;
    case ReductionKind::BC: return l.b - l.c;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("the tetrahedral a=b locus is the diagonal") {
  const UnitVec p = to_sphere(Complex(0.1, 0.1), ChartId::M, 3);
  CHECK(std::abs(reduction_residual(ReductionKind::AB, 3, p)) < 1e-15);
  CHECK(reduction_circle(3).line);
  const ReductionSample s = reduction_point(ReductionKind::AB, 3, 1.25 * kPi);
  CHECK(s.line_locus);
  CHECK(std::abs(s.sample.z.z.real() - s.sample.z.z.imag()) < 1e-12);
  CHECK_THROWS_AS(reduction_point(ReductionKind::AB, 3, 0.5 * kPi), Error);
}

TEST_CASE("a=c and b=c are diagonal reflections for the tetrahedral family") {
  const ReductionSample s = reduction_point(ReductionKind::AC, 3, 1.1 * kPi);
  const Complex z = s.sample.z.z;
  const UnitVec mirrored = to_sphere(Complex(z.imag(), z.real()), ChartId::M, 3);
  CHECK(std::abs(reduction_residual(ReductionKind::BC, 3, mirrored)) < 1e-12);
}

TEST_CASE("a=c root on the vertical ray") {
  // r^4 - 3 sqrt3 (sqrt3 - 1) r^2 + 2 - sqrt3 = 0 at cos(theta) = 0
  const double s3 = std::sqrt(3.0);
  const double p = 3 * s3 * (s3 - 1), q = 2 - s3;
  const double r = std::sqrt((p - std::sqrt(p * p - 4 * q)) / 2);
  CHECK(reduction_point(ReductionKind::AC, 3, 1.5 * kPi).sample.r ==
        Approx(r).epsilon(1e-12));
}

TEST_CASE("a=c has no root on rays that miss the curve") {
  // the quartic is positive on (0, 1] when cos(theta) is large enough
  try {
    const ReductionSample s = reduction_point(ReductionKind::AC, 3, kPi / 3);
    CHECK(std::abs(reduction_m_chart_residual(ReductionKind::AC, 3, s.sample.z.z)) < 1e-10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRootInDisk);
  }
  CHECK_THROWS_AS(reduction_quartic(ReductionKind::AB, 4), Error);
}

TEST_CASE("sampled loci satisfy the sphere forms and the length equalities") {
  for (int n : {3, 4, 5}) {
    for (ReductionKind kind : {ReductionKind::AB, ReductionKind::AC, ReductionKind::BC}) {
      CAPTURE(n);
      CAPTURE(to_string(kind));
      if (kind == ReductionKind::AB && reduction_circle(n).line) continue;
      auto [lo, hi] = reduction_theta_range(kind, n);
      int checked = 0;
      for (int i = 1; i < 128; ++i) {
        ReductionSample s;
        try {
          s = reduction_point(kind, n, lo + (hi - lo) * i / 128);
        } catch (const Error&) {
          continue;
        }
        CHECK(std::abs(reduction_residual(kind, n, s.sample.xi)) < 1e-10);
        CHECK(std::abs(reduction_m_chart_residual(kind, n, s.sample.z.z)) < 1e-10);
        if (analytic_in_moduli(n, s.sample.xi)) {
          CHECK(std::abs(reduction_gap(kind, n, s.sample.xi)) < 1e-9);
          ++checked;
        }
      }
      CHECK(checked > 0);
    }
  }
}

TEST_CASE("tetrahedral a=b lengths along the diagonal") {
  const int n = 3;
  for (double r : {0.05, 0.15, 0.3}) {
    const UnitVec V = to_sphere(std::polar(r, 1.25 * kPi), ChartId::M, n);
    REQUIRE(analytic_in_moduli(n, V));
    CHECK(std::abs(reduction_gap(ReductionKind::AB, n, V)) < 1e-12);
  }
}

TEST_CASE("b=c touches the first curve") {
  for (int n : {3, 4}) {
    const TangencyReport t = check_bc_below_gammaA(n);
    CHECK(t.min_abs_gap < 1e-6);
    CHECK(t.min_gap >= -1e-9);
    CHECK(t.tangent_and_below());
    CHECK(t.tangency_theta == Approx(kPi / 2).epsilon(1e-3));
  }
  // for the dodecahedral family the curve crosses to the far side
  const TangencyReport t5 = check_bc_below_gammaA(5);
  CHECK(t5.min_abs_gap < 1e-6);
  CHECK(t5.min_gap < -0.02);
  CHECK_FALSE(t5.tangent_and_below());
}
