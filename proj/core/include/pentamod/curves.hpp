#pragma once

#include <string_view>
#include <utility>

#include "pentamod/projection.hpp"

namespace pentamod {

/// The three boundary curves. gamma_C has a representation in both the A- and
/// the B-chart.
enum class CurveKind { GammaA, GammaB, GammaC_A, GammaC_B };

/// How the chart coordinate z relates to the generic curve variable v, whose
/// curve is |v| = r(phi) with phi - alpha in [0, pi/2].
enum class VariableMap {
  Identity,      // v = z
  NegConj,       // v = -conj(z)
  ConjRotated,   // v = conj(z) e^{i pi/3}
  NegRotated,    // v = -z e^{i pi/3}
};

struct CurveSpec {
  CurveKind which = CurveKind::GammaA;
  int n = 3;
  double lambda = 0.0;
  double alpha = 0.0;
  ChartId chart = ChartId::A;
  VariableMap map = VariableMap::Identity;
  double theta_min = 0.0;
  double theta_max = 0.0;
};

CurveSpec curve_spec(CurveKind which, int n);

struct CurveSample {
  double theta = 0.0;
  double r = 0.0;
  ChartPoint z;
  UnitVec xi;
};

/// Curve variable v for chart coordinate z (also valid for the horizontal
/// part of a sphere point, since every map is a linear isometry).
Complex to_curve_variable(const CurveSpec& spec, Complex z);

/// Radius on the curve at chart angle theta. r = 0 exactly at the endpoint
/// where the curve reaches the chart origin.
double gamma_radius(const CurveSpec& spec, double theta);

/// Throws Error{OutOfRange} outside [theta_min, theta_max].
CurveSample gamma_point(const CurveSpec& spec, double theta);

/// Residuals of the four equivalent descriptions of the curve.
double polar_residual(const CurveSpec& spec, double theta, double r);
double cartesian_residual(const CurveSpec& spec, Complex z);
double complex_residual(const CurveSpec& spec, Complex z);
/// Quadratic form on the sphere, evaluated in the curve's chart frame.
double gamma_residual(const CurveSpec& spec, const UnitVec& p);

/// Approximate angular distance from p to the full locus gamma_residual = 0.
double distance_to_gamma_locus(const CurveSpec& spec, const UnitVec& p);

/// Boundary curves in the M-chart.
enum class MCurve { A, B, C };

std::string_view to_string(MCurve c);

std::pair<double, double> m_chart_range(MCurve which);

/// The positive quantity R = 1/r - r along the curve.
double m_chart_R(MCurve which, int n, double theta);

/// Throws Error{OutOfRange} outside m_chart_range.
CurveSample gamma_m_chart(MCurve which, int n, double theta);

/// Cartesian polynomial of the curve in the M-chart.
double m_chart_cartesian_residual(MCurve which, int n, Complex z);

}  // namespace pentamod
