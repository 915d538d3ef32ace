#include "pentamod/reduction.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <limits>
#include <string>

#include "pentamod/error.hpp"

namespace pentamod {

namespace {

constexpr int kBracketIntervals = 64;
constexpr double kRootTol = 1e-13;

double quartic_value(const ReductionQuartic& q, double r, double t) {
  const double r2 = r * r;
  return r2 * r2 + q.c2 * r2 + q.c0 + q.c1 * r * (r2 + 1.0) * t;
}

/// Radical constants of the n = 5 b=c quartic.
double p5() { return std::sqrt(2.0) * std::sqrt(std::sqrt(5.0) + 1.0) * std::pow(5.0, 0.25) - std::sqrt(5.0) - 1.0; }
double q5() { return std::pow(std::sqrt(5.0) + 1.0, 1.5) * std::pow(5.0, 0.25) / std::sqrt(2.0); }

double wrap_angle(double theta) {
  const double t = std::fmod(theta, 2.0 * kPi);
  return t < 0.0 ? t + 2.0 * kPi : t;
}

CurveSample m_sample(int n, double theta, double r) {
  CurveSample s;
  s.theta = theta;
  s.r = r;
  s.z = {std::polar(r, theta), ChartId::M, n};
  s.xi = to_sphere(s.z);
  return s;
}

[[noreturn]] void no_root(ReductionKind kind, int n, double theta) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s, n=%d: no root in the unit disk at theta=%.12g",
                std::string(to_string(kind)).c_str(), n, theta);
  throw Error(ErrorCode::NoRootInDisk, buf);
}

}  // namespace

std::string_view to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::AB: return "a=b";
    case ReductionKind::AC: return "a=c";
    case ReductionKind::BC: return "b=c";
  }
  return "?";
}

ReductionQuartic reduction_quartic(ReductionKind kind, int n) {
  solid_constants(n);
  if (kind == ReductionKind::AB) {
    throw Error(ErrorCode::InvalidArgument, "a=b is a circle, not a quartic");
  }
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r5 = std::sqrt(5.0);
  const double r6 = std::sqrt(6.0);
  const double r15 = std::sqrt(15.0);
  ReductionQuartic q;
  q.uses_sin = kind == ReductionKind::BC;
  if (n == 3) {
    q.c1 = r2 * (r3 - 1.0);
    q.c2 = -3.0 * r3 * (r3 - 1.0);
    q.c0 = 2.0 - r3;
  } else if (kind == ReductionKind::AC) {
    if (n == 4) {
      q.c1 = 2.0 * (r3 - r2);
      q.c2 = -6.0 * r3 * (r3 - r2);
      q.c0 = 5.0 - 2.0 * r6;
    } else {
      q.c1 = (r5 - r3) * (r3 - 1.0);
      q.c2 = 3.0 * (2.0 * r15 - 3.0 * r5 + 4.0 * r3 - 9.0);
      q.c0 = -2.0 * r15 + 3.0 * r5 - 4.0 * r3 + 8.0;
    }
  } else {
    if (n == 4) {
      q.c1 = 2.0 * (r2 - 1.0);
      q.c2 = -6.0 * r2 * (r2 - 1.0);
      q.c0 = 3.0 - 2.0 * r2;
    } else {
      q.c1 = p5();
      q.c2 = 3.0 * (q5() - r5 - 5.0);
      q.c0 = -q5() + r5 + 4.0;
    }
  }
  return q;
}

ReductionCircle reduction_circle(int n) {
  solid_constants(n);
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r5 = std::sqrt(5.0);
  ReductionCircle c;
  switch (n) {
    case 3:
      c.line = true;
      break;
    case 4:
      c.D = 2.0 * r2 * (r3 + 2.0);
      c.E = -2.0 * r3 * (r3 + 2.0);
      break;
    default: {
      const double mu = std::sqrt(195.0 - 6.0 * r5) / 58.0;
      c.D = -2.0 * ((r5 - 11.0) * mu - r5);
      c.E = -2.0 * ((5.0 * r5 + 3.0) * mu + 3.0);
      break;
    }
  }
  return c;
}

double reduction_residual(ReductionKind kind, int n, const UnitVec& p) {
  solid_constants(n);
  const double x1 = p.xi1();
  const double x2 = p.xi2();
  const double x3 = p.xi3();
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r5 = std::sqrt(5.0);
  const double f5 = std::pow(5.0, 0.25);
  switch (kind) {
    case ReductionKind::AB:
      switch (n) {
        case 3: return x1 - x2;
        case 4: return r2 * x1 - r3 * x2 - (r3 - 2.0) * x3;
        default:
          return 2.0 * f5 * x1 - std::sqrt(6.0) * std::sqrt(r5 + 1.0) * x2 +
                 ((r5 + 3.0) * f5 - r3 / r2 * std::pow(r5 + 1.0, 1.5)) * x3;
      }
    case ReductionKind::AC:
      switch (n) {
        case 3: return 2.0 * r3 * x3 * x3 + r2 * x1 + x3 - r3;
        case 4: return 2.0 * r3 * x3 * x3 + x1 + r2 * x3 - r3;
        default: return 4.0 * r3 * x3 * x3 + (r5 - 1.0) * x1 + (r5 + 1.0) * x3 - 2.0 * r3;
      }
    case ReductionKind::BC:
      switch (n) {
        case 3: return 2.0 * r3 * x3 * x3 + r2 * x2 + x3 - r3;
        case 4: return 2.0 * r2 * x3 * x3 + x2 + x3 - r2;
        default:
          return 2.0 * r2 * f5 * x3 * x3 + std::sqrt(r5 - 1.0) * x2 + std::sqrt(r5 + 1.0) * x3 -
                 r2 * f5;
      }
  }
  return 0.0;
}

double reduction_m_chart_residual(ReductionKind kind, int n, Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double rho = x * x + y * y;
  if (kind == ReductionKind::AB) {
    const ReductionCircle c = reduction_circle(n);
    if (c.line) return x - y;
    return rho + c.D * x + c.E * y - 1.0;
  }
  const ReductionQuartic q = reduction_quartic(kind, n);
  const double t = q.uses_sin ? y : x;
  return rho * rho + q.c1 * rho * t + q.c2 * rho + q.c1 * t + q.c0;
}

ReductionSample reduction_point(ReductionKind kind, int n, double theta) {
  ReductionSample out;
  if (kind == ReductionKind::AB) {
    const ReductionCircle c = reduction_circle(n);
    if (c.line) {
      const double t = wrap_angle(theta);
      if (std::abs(t - 1.25 * kPi) < 1e-12) {
        out.sample = m_sample(n, theta, gamma_m_chart(MCurve::C, n, 1.25 * kPi).r);
      } else if (std::abs(t - 0.25 * kPi) < 1e-12) {
        out.sample = m_sample(n, theta, 1.0);
      } else {
        no_root(kind, n, theta);
      }
      out.line_locus = true;
      return out;
    }
    const double b = c.D * std::cos(theta) + c.E * std::sin(theta);
    if (b < 0.0) no_root(kind, n, theta);
    out.sample = m_sample(n, theta, 2.0 / (b + std::sqrt(b * b + 4.0)));
    return out;
  }

  const ReductionQuartic q = reduction_quartic(kind, n);
  const double t = q.uses_sin ? std::sin(theta) : std::cos(theta);
  auto f = [&](double r) { return quartic_value(q, r, t); };

  double lo = 0.0;
  double f_lo = f(lo);
  for (int k = 1; k <= kBracketIntervals; ++k) {
    const double hi = static_cast<double>(k) / kBracketIntervals;
    const double f_hi = f(hi);
    if (f_hi == 0.0) {
      out.sample = m_sample(n, theta, hi);
      return out;
    }
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      std::uintmax_t max_iter = 200;
      auto done = [](double a, double b) { return std::abs(b - a) <= kRootTol; };
      const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, done, max_iter);
      out.sample = m_sample(n, theta, 0.5 * (a + b));
      return out;
    }
    lo = hi;
    f_lo = f_hi;
  }
  no_root(kind, n, theta);
}

std::pair<double, double> reduction_theta_range(ReductionKind kind, int n) {
  if (kind != ReductionKind::AB) return {0.0, 2.0 * kPi};
  const ReductionCircle c = reduction_circle(n);
  if (c.line) return {1.25 * kPi, 1.25 * kPi};
  const double center = std::atan2(c.E, c.D);
  return {center - 0.5 * kPi, center + 0.5 * kPi};
}

TangencyReport check_bc_below_gammaA(int n, int samples) {
  const auto [lo, hi] = m_chart_range(MCurve::A);
  TangencyReport rep;
  rep.min_gap = std::numeric_limits<double>::infinity();
  rep.max_gap = -std::numeric_limits<double>::infinity();
  rep.min_abs_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double theta = lo + (hi - lo) * i / (samples - 1);
    double r_bc = 0.0;
    try {
      r_bc = reduction_point(ReductionKind::BC, n, theta).sample.r;
    } catch (const Error&) {
      continue;
    }
    const double gap = gamma_m_chart(MCurve::A, n, theta).r - r_bc;
    rep.min_gap = std::min(rep.min_gap, gap);
    rep.max_gap = std::max(rep.max_gap, gap);
    if (std::abs(gap) < rep.min_abs_gap) {
      rep.min_abs_gap = std::abs(gap);
      rep.tangency_theta = theta;
    }
    ++rep.samples;
  }
  return rep;
}

}  // namespace pentamod
