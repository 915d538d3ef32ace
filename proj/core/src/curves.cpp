#include "pentamod/curves.hpp"

#include <cmath>
#include <cstdio>

#include "pentamod/error.hpp"

namespace pentamod {

namespace {

constexpr double kRangeSlack = 1e-12;

void require_in_range(double theta, double lo, double hi) {
  if (!(theta >= lo - kRangeSlack && theta <= hi + kRangeSlack)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "theta=%.12g outside [%.12g, %.12g]", theta, lo, hi);
    throw Error(ErrorCode::OutOfRange, buf);
  }
}

/// Curve angle phi of v for chart angle theta.
double phi_of(const CurveSpec& s, double theta) {
  switch (s.map) {
    case VariableMap::Identity: return theta;
    case VariableMap::NegConj: return kPi - theta;
    case VariableMap::ConjRotated: return kPi / 3.0 - theta;
    case VariableMap::NegRotated: return theta + kPi + kPi / 3.0;
  }
  return theta;
}

/// Chart angle at which the curve reaches the chart origin.
double origin_theta(const CurveSpec& s) {
  switch (s.which) {
    case CurveKind::GammaA: return s.theta_max;
    case CurveKind::GammaB: return s.theta_min;
    case CurveKind::GammaC_A: return s.theta_min;
    case CurveKind::GammaC_B: return s.theta_max;
  }
  return s.theta_max;
}

/// Non-negative root of c r^2 + 2 lambda r - c = 0, written without the
/// sec singularity at c = 0.
double radius_for(double c, double lambda) {
  return std::max(0.0, c / (lambda + std::sqrt(c * c + lambda * lambda)));
}

double sphere_form(const CurveSpec& s, double x1, double x2, double x3) {
  return s.lambda * (x1 * x1 + x2 * x2) + (x1 * std::cos(s.alpha) + x2 * std::sin(s.alpha)) * x3;
}

}  // namespace

CurveSpec curve_spec(CurveKind which, int n) {
  const SolidConstants& c = solid_constants(n);
  CurveSpec s;
  s.which = which;
  s.n = n;
  switch (which) {
    case CurveKind::GammaA:
      s.lambda = c.lambda_A;
      s.alpha = kPi / 3.0;
      s.chart = ChartId::A;
      s.map = VariableMap::Identity;
      s.theta_min = 2.0 * kPi / 3.0;
      s.theta_max = 5.0 * kPi / 6.0;
      break;
    case CurveKind::GammaB:
      s.lambda = c.lambda_B;
      s.alpha = kPi / n;
      s.chart = ChartId::B;
      s.map = VariableMap::NegConj;
      s.theta_min = (0.5 - 1.0 / n) * kPi;
      s.theta_max = (1.0 - 2.0 / n) * kPi;
      break;
    case CurveKind::GammaC_A:
      s.lambda = c.lambda_C;
      s.alpha = kPi / 3.0;
      s.chart = ChartId::A;
      s.map = VariableMap::ConjRotated;
      s.theta_min = -0.5 * kPi;
      s.theta_max = 0.0;
      break;
    case CurveKind::GammaC_B:
      s.lambda = c.lambda_C;
      s.alpha = kPi / 3.0;
      s.chart = ChartId::B;
      s.map = VariableMap::NegRotated;
      s.theta_min = -kPi;
      s.theta_max = -0.5 * kPi;
      break;
  }
  return s;
}

Complex to_curve_variable(const CurveSpec& spec, Complex z) {
  const Complex rot = std::polar(1.0, kPi / 3.0);
  switch (spec.map) {
    case VariableMap::Identity: return z;
    case VariableMap::NegConj: return -std::conj(z);
    case VariableMap::ConjRotated: return std::conj(z) * rot;
    case VariableMap::NegRotated: return -z * rot;
  }
  return z;
}

double gamma_radius(const CurveSpec& spec, double theta) {
  if (theta == origin_theta(spec)) return 0.0;
  return radius_for(std::cos(phi_of(spec, theta) - spec.alpha), spec.lambda);
}

CurveSample gamma_point(const CurveSpec& spec, double theta) {
  require_in_range(theta, spec.theta_min, spec.theta_max);
  CurveSample s;
  s.theta = theta;
  s.r = gamma_radius(spec, theta);
  s.z = {std::polar(s.r, theta), spec.chart, spec.n};
  s.xi = to_sphere(s.z);
  return s;
}

double polar_residual(const CurveSpec& spec, double theta, double r) {
  const double c = std::cos(phi_of(spec, theta) - spec.alpha);
  return c * r * r + 2.0 * spec.lambda * r - c;
}

double cartesian_residual(const CurveSpec& spec, Complex z) {
  const Complex v = to_curve_variable(spec, z);
  const double x = v.real();
  const double y = v.imag();
  const double rho = x * x + y * y;
  return 2.0 * spec.lambda * rho + (x * std::cos(spec.alpha) + y * std::sin(spec.alpha)) * (rho - 1.0);
}

double complex_residual(const CurveSpec& spec, Complex z) {
  const Complex v = to_curve_variable(spec, z);
  const double rho = std::norm(v);
  const Complex e = std::polar(1.0, spec.alpha);
  const Complex value = 4.0 * spec.lambda * rho + (v * std::conj(e) + std::conj(v) * e) * (rho - 1.0);
  return value.real();
}

double gamma_residual(const CurveSpec& spec, const UnitVec& p) {
  const ChartFrame& f = chart_frame(spec.n, spec.chart);
  const Complex h = to_curve_variable(spec, {dot(p.vec(), f.e1), dot(p.vec(), f.e2)});
  return sphere_form(spec, h.real(), h.imag(), dot(p.vec(), f.e3));
}

double distance_to_gamma_locus(const CurveSpec& spec, const UnitVec& p) {
  const ChartFrame& f = chart_frame(spec.n, spec.chart);
  const Complex h = to_curve_variable(spec, {dot(p.vec(), f.e1), dot(p.vec(), f.e2)});
  const double x1 = h.real();
  const double x2 = h.imag();
  const double x3 = dot(p.vec(), f.e3);
  const double ca = std::cos(spec.alpha);
  const double sa = std::sin(spec.alpha);
  const Vec3 q{x1, x2, x3};
  const Vec3 g{2.0 * spec.lambda * x1 + ca * x3, 2.0 * spec.lambda * x2 + sa * x3, x1 * ca + x2 * sa};
  const double tangential = (g - q * dot(g, q)).norm();
  const double value = std::abs(sphere_form(spec, x1, x2, x3));
  if (tangential < 1e-300) return value == 0.0 ? 0.0 : kPi;
  return value / tangential;
}

std::string_view to_string(MCurve c) {
  switch (c) {
    case MCurve::A: return "gammaA";
    case MCurve::B: return "gammaB";
    case MCurve::C: return "gammaC";
  }
  return "?";
}

std::pair<double, double> m_chart_range(MCurve which) {
  switch (which) {
    case MCurve::A: return {0.5 * kPi, kPi};
    case MCurve::B: return {1.5 * kPi, 2.0 * kPi};
    case MCurve::C: return {kPi, 1.5 * kPi};
  }
  return {0.0, 0.0};
}

double m_chart_R(MCurve which, int n, double theta) {
  solid_constants(n);
  const double r2 = std::sqrt(2.0);
  const double r5 = std::sqrt(5.0);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (which == MCurve::C) {
    switch (n) {
      case 3: return r2 * (2.0 * c * s - 1.0) / (c + s);
      case 4: return 2.0 * (c * s - r2) / (c + r2 * s);
      default: return 2.0 * (r5 - 1.0) * (c * s - r5 - 2.0) / (2.0 * c + (r5 + 1.0) * s);
    }
  }
  double K = 0.0;
  double L = 0.0;
  if (which == MCurve::A) {
    switch (n) {
      case 3: K = 2.0 * r2 * c; L = 4.0 * c * c + 2.0; break;
      case 4: K = 0.0; L = 4.0 * c * c + 4.0; break;
      default: K = -2.0 * (r5 - 1.0) * c; L = 4.0 * c * c + 2.0 * r5 + 6.0; break;
    }
  } else {
    switch (n) {
      case 3: K = 2.0 * r2 * s; L = 4.0 * s * s + 2.0; break;
      case 4: K = 4.0 * s; L = 4.0 * s * s + 8.0; break;
      default: K = 2.0 * (r5 + 1.0) * s; L = 4.0 * s * s + 6.0 * r5 + 14.0; break;
    }
  }
  return 0.5 * (std::sqrt(K * K + 4.0 * L) + K);
}

CurveSample gamma_m_chart(MCurve which, int n, double theta) {
  const auto [lo, hi] = m_chart_range(which);
  require_in_range(theta, lo, hi);
  const double R = m_chart_R(which, n, theta);
  CurveSample s;
  s.theta = theta;
  s.r = 2.0 / (std::sqrt(R * R + 4.0) + R);
  s.z = {std::polar(s.r, theta), ChartId::M, n};
  s.xi = to_sphere(s.z);
  return s;
}

double m_chart_cartesian_residual(MCurve which, int n, Complex z) {
  solid_constants(n);
  const double r2 = std::sqrt(2.0);
  const double r5 = std::sqrt(5.0);
  const double x = z.real();
  const double y = z.imag();
  const double rho = x * x + y * y;
  switch (which) {
    case MCurve::A:
      switch (n) {
        case 3: return rho * rho + 2.0 * r2 * rho * x - 8.0 * x * x - 4.0 * y * y - 2.0 * r2 * x + 1.0;
        case 4: return rho * rho - 10.0 * x * x - 6.0 * y * y + 1.0;
        default:
          return rho * rho - 2.0 * (r5 - 1.0) * rho * x - 2.0 * (r5 + 6.0) * x * x -
                 2.0 * (r5 + 4.0) * y * y + 2.0 * (r5 - 1.0) * x + 1.0;
      }
    case MCurve::B:
      switch (n) {
        case 3: return rho * rho + 2.0 * r2 * rho * y - 4.0 * x * x - 8.0 * y * y - 2.0 * r2 * y + 1.0;
        case 4: return rho * rho + 4.0 * rho * y - 10.0 * x * x - 14.0 * y * y - 4.0 * y + 1.0;
        default:
          return rho * rho + 2.0 * (r5 + 1.0) * rho * y - 2.0 * (3.0 * r5 + 8.0) * x * x -
                 2.0 * (3.0 * r5 + 10.0) * y * y - 2.0 * (r5 + 1.0) * y + 1.0;
      }
    case MCurve::C:
      switch (n) {
        case 3: return (rho - 1.0) * (x + y) - r2 * (x - y) * (x - y);
        case 4: return (rho - 1.0) * (x + r2 * y) - 2.0 * r2 * rho + 2.0 * x * y;
        default:
          return (rho - 1.0) * (2.0 * x + (r5 + 1.0) * y) - 2.0 * (r5 + 3.0) * rho +
                 2.0 * (r5 - 1.0) * x * y;
      }
  }
  return 0.0;
}

}  // namespace pentamod
