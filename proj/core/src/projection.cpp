#include "pentamod/projection.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pentamod/error.hpp"

namespace pentamod {

namespace {

void require_solid(int n) {
  if (n < 3 || n > 5) {
    throw Error(ErrorCode::UnsupportedSolid, "n must be 3, 4 or 5, got " + std::to_string(n));
  }
}

SolidConstants make_constants(int n) {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r5 = std::sqrt(5.0);
  const double r15 = std::sqrt(15.0);
  SolidConstants c;
  c.n = n;
  switch (n) {
    case 3:
      c.N = 4;
      c.d_AB = 1.0 / r2;
      c.d_AM = (r3 - 1.0) / r2;
      c.d_BM = (r3 - 1.0) / r2;
      c.lambda_A = 1.0 / (4.0 * r2);
      c.lambda_B = 1.0 / (4.0 * r2);
      c.lambda_C = 1.0 / (2.0 * r2);
      break;
    case 4:
      c.N = 8;
      c.d_AB = (r3 - 1.0) / r2;
      c.d_AM = r3 - r2;
      c.d_BM = r2 - 1.0;
      c.lambda_A = 1.0 / (2.0 * r2);
      c.lambda_B = 0.5;
      c.lambda_C = 1.0 / r2;
      break;
    default:
      c.N = 20;
      c.d_AB = 0.25 * (std::sqrt(30.0 + 6.0 * r5) - r5 - 3.0);
      c.d_AM = 0.5 * (r15 - r5 + r3 - 3.0);
      c.d_BM = 0.5 * (std::sqrt(10.0 + 2.0 * r5) - r5 - 1.0);
      c.lambda_A = (r5 + 3.0) / 8.0;
      c.lambda_B = (r5 + 2.0) / 4.0;
      c.lambda_C = (r5 + 3.0) / 4.0;
      break;
  }
  if (std::abs(tan_equation_residual(c)) > 1e-12) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "d_AB fails its defining equation for n=%d", n);
    throw std::logic_error(buf);
  }
  return c;
}

Vec3 normalized(const Vec3& v) { return v / v.norm(); }

Vec3 tangential_part(const Vec3& p, const Vec3& e3) { return p - e3 * dot(p, e3); }

UnitVec world_from_chart(Complex z, const ChartFrame& f) {
  const double r2 = std::norm(z);
  const double s = 1.0 / (r2 + 1.0);
  const double x = 2.0 * z.real() * s;
  const double y = 2.0 * z.imag() * s;
  const double w = (r2 - 1.0) * s;
  return UnitVec(f.e1 * x + f.e2 * y + f.e3 * w);
}

struct SolidGeometry {
  std::array<ChartFrame, 3> frames;
  KeyPoints points;
};

SolidGeometry make_geometry(int n) {
  const SolidConstants& c = solid_constants(n);
  SolidGeometry g;
  const ChartFrame world{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  const UnitVec A = world_from_chart({-c.d_AM, 0.0}, world);
  const UnitVec B = world_from_chart({0.0, -c.d_BM}, world);

  ChartFrame fa;
  fa.e3 = -A.vec();
  fa.e1 = normalized(tangential_part(B.vec(), fa.e3));
  fa.e2 = cross(fa.e3, fa.e1);

  ChartFrame fb;
  fb.e3 = -B.vec();
  fb.e1 = -normalized(tangential_part(A.vec(), fb.e3));
  fb.e2 = cross(fb.e3, fb.e1);

  g.frames = {fa, fb, world};
  g.points.A = A;
  g.points.B = B;
  g.points.M = UnitVec(0.0, 0.0, -1.0);
  g.points.C = world_from_chart(std::polar(c.d_AM, -kPi / 3.0), fa);
  g.points.B_prime = world_from_chart(std::polar(c.d_AB, 2.0 * kPi / 3.0), fa);
  g.points.A_prime = world_from_chart(std::polar(c.d_AB, (1.0 - 2.0 / n) * kPi), fb);
  return g;
}

const SolidGeometry& geometry(int n) {
  require_solid(n);
  static const std::array<SolidGeometry, 3> table = {make_geometry(3), make_geometry(4),
                                                      make_geometry(5)};
  return table[static_cast<std::size_t>(n - 3)];
}

std::size_t chart_index(ChartId chart) { return static_cast<std::size_t>(chart); }

}  // namespace

char to_char(ChartId c) {
  switch (c) {
    case ChartId::A: return 'A';
    case ChartId::B: return 'B';
    case ChartId::M: return 'M';
  }
  return '?';
}

const SolidConstants& solid_constants(int n) {
  require_solid(n);
  static const std::array<SolidConstants, 3> table = {make_constants(3), make_constants(4),
                                                       make_constants(5)};
  return table[static_cast<std::size_t>(n - 3)];
}

double tan_equation_residual(const SolidConstants& c) {
  const double d = c.d_AB;
  return (1.0 / d - d) * std::tan(kPi / 3.0) - (1.0 / d + d) * std::tan((0.5 - 1.0 / c.n) * kPi);
}

const ChartFrame& chart_frame(int n, ChartId chart) {
  return geometry(n).frames[chart_index(chart)];
}

const KeyPoints& key_points(int n) { return geometry(n).points; }

UnitVec to_sphere(Complex z, ChartId chart, int n) {
  return world_from_chart(z, chart_frame(n, chart));
}

UnitVec to_sphere(const ChartPoint& p) { return to_sphere(p.z, p.chart, p.n); }

ChartPoint to_chart(const UnitVec& p, ChartId chart, int n) {
  const ChartFrame& f = chart_frame(n, chart);
  const double x = dot(p.vec(), f.e1);
  const double y = dot(p.vec(), f.e2);
  const double w = dot(p.vec(), f.e3);
  const double denom = 1.0 - w;
  if (denom < 1e-12) {
    throw Error(ErrorCode::AntipodeOfOrigin, "point is the antipode of the chart origin");
  }
  return {Complex{x / denom, y / denom}, chart, n};
}

Rotation chart_rotation(int n, ChartId chart, double angle) {
  return {UnitVec(chart_frame(n, chart).e3), angle};
}

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(a * d - b * c) <= 1e-12) {
    throw Error(ErrorCode::SingularMap, "Mobius map has vanishing determinant");
  }
}

ExtComplex MobiusMap::apply(Complex z) const {
  const Complex num = a_ * z + b_;
  const Complex den = c_ * z + d_;
  if (std::abs(den) < 1e-14 * std::abs(num)) return ExtComplex::infinity();
  return {num / den, false};
}

ExtComplex MobiusMap::apply(const ExtComplex& z) const {
  if (!z.infinite) return apply(z.z);
  if (std::abs(c_) < 1e-14 * std::abs(a_)) return ExtComplex::infinity();
  return {a_ / c_, false};
}

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

MobiusMap MobiusMap::compose(const MobiusMap& inner) const {
  return {a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
          c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_};
}

MobiusMap mobius_M_to_A(int n) {
  const double d = solid_constants(n).d_AM;
  const Complex rot = std::polar(1.0, kPi / 3.0);
  return {rot, d * rot, -d, 1.0};
}

MobiusMap mobius_M_to_B(int n) {
  const double d = solid_constants(n).d_BM;
  const Complex i{0.0, 1.0};
  const Complex rot = std::polar(1.0, (0.5 - 1.0 / n) * kPi);
  return {rot, i * d * rot, i * d, 1.0};
}

}  // namespace pentamod
