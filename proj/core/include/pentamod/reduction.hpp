#pragma once

#include <string_view>
#include <utility>

#include "pentamod/curves.hpp"

namespace pentamod {

/// Loci where two edge lengths of the pentagon coincide.
enum class ReductionKind { AB, AC, BC };

std::string_view to_string(ReductionKind k);

/// Quartic r^4 + c2 r^2 + c0 + c1 r (r^2 + 1) t = 0 in the M-chart, where t
/// is cos(theta) for a=c and sin(theta) for b=c.
struct ReductionQuartic {
  double c1 = 0.0;
  double c2 = 0.0;
  double c0 = 0.0;
  bool uses_sin = false;
};

/// Throws Error{InvalidArgument} for ReductionKind::AB.
ReductionQuartic reduction_quartic(ReductionKind kind, int n);

/// Circle x^2 + y^2 + D x + E y - 1 = 0 of the a=b locus in the M-chart. For
/// n = 3 the locus is the line x = y and `line` is set.
struct ReductionCircle {
  double D = 0.0;
  double E = 0.0;
  bool line = false;
};

ReductionCircle reduction_circle(int n);

/// Plane (a=b) or parabolic cylinder (a=c, b=c) form on the sphere, in the
/// M-chart frame. Zero on the locus.
double reduction_residual(ReductionKind kind, int n, const UnitVec& p);

/// Cartesian form of the locus in the M-chart.
double reduction_m_chart_residual(ReductionKind kind, int n, Complex z);

struct ReductionSample {
  CurveSample sample;
  /// n = 3, a=b: the locus is a whole ray; the sample is clipped to the
  /// moduli boundary.
  bool line_locus = false;
};

/// Smallest admissible root r in (0, 1] on the ray at M-chart angle theta.
/// Throws Error{NoRootInDisk} when there is none.
ReductionSample reduction_point(ReductionKind kind, int n, double theta);

/// Angular range over which reduction_point has a root.
std::pair<double, double> reduction_theta_range(ReductionKind kind, int n);

struct TangencyReport {
  /// gap = r(gamma_A) - r(b=c) along M-chart rays; positive means b=c lies
  /// on the moduli side.
  double max_gap = 0.0;
  double min_gap = 0.0;
  double min_abs_gap = 0.0;
  double tangency_theta = 0.0;
  int samples = 0;

  bool tangent_and_below() const { return min_abs_gap < 1e-6 && min_gap >= -1e-9; }
};

TangencyReport check_bc_below_gammaA(int n, int samples = 2049);

}  // namespace pentamod
