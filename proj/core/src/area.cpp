#include "pentamod/area.hpp"

#include <cmath>

#include "pentamod/curves.hpp"
#include "pentamod/projection.hpp"
#include "pentamod/quadrature.hpp"

namespace pentamod {

namespace {

double triangle_area(int n) { return 4.0 * kPi / (6.0 * solid_constants(n).N); }

double curve_fan(CurveKind kind, int n, double alpha, double beta) {
  const CurveSpec spec = curve_spec(kind, n);
  return fan_area_quadrature([&spec](double t) { return gamma_radius(spec, t); }, alpha, beta);
}

}  // namespace

double elliptic_F_imag(double t, double lambda) {
  const double k2 = 1.0 / (lambda * lambda);
  return integrate(
             [k2](double u) {
               const double s = std::sin(u);
               return 1.0 / std::sqrt(1.0 + k2 * s * s);
             },
             0.0, t)
      .value;
}

double fan_area_quadrature(const std::function<double(double)>& r, double alpha, double beta) {
  return integrate(
             [&r](double t) {
               const double v = r(t);
               return 2.0 * v * v / (1.0 + v * v);
             },
             alpha, beta, 1e-12)
      .value;
}

std::string_view to_string(AreaPart p) {
  switch (p) {
    case AreaPart::A4: return "A4";
    case AreaPart::A5: return "A5";
    case AreaPart::A8: return "A8";
    case AreaPart::A13: return "A13";
  }
  return "?";
}

double part_area_elliptic(AreaPart part, int n) {
  const SolidConstants& c = solid_constants(n);
  const double sixth = kPi / 6.0;
  const double beta = (0.5 - 1.0 / n) * kPi;
  switch (part) {
    case AreaPart::A4: return sixth - elliptic_F_imag(sixth, c.lambda_C);
    case AreaPart::A5: return sixth - elliptic_F_imag(sixth, c.lambda_A);
    case AreaPart::A8: return beta - elliptic_F_imag(beta, c.lambda_C);
    case AreaPart::A13: return beta - elliptic_F_imag(beta, c.lambda_B);
  }
  return 0.0;
}

double part_area_quadrature(AreaPart part, int n) {
  switch (part) {
    case AreaPart::A4: return curve_fan(CurveKind::GammaC_A, n, -0.5 * kPi, -kPi / 3.0);
    case AreaPart::A5: return curve_fan(CurveKind::GammaA, n, 2.0 * kPi / 3.0, 5.0 * kPi / 6.0);
    case AreaPart::A8: return curve_fan(CurveKind::GammaC_B, n, -kPi + kPi / n, -0.5 * kPi);
    case AreaPart::A13: {
      const CurveSpec s = curve_spec(CurveKind::GammaB, n);
      return curve_fan(CurveKind::GammaB, n, s.theta_min, s.theta_max);
    }
  }
  return 0.0;
}

AreaReport part_areas(int n) {
  AreaReport r;
  r.n = n;
  r.A1 = r.A2 = r.A3 = r.A7 = triangle_area(n);
  r.A4 = part_area_elliptic(AreaPart::A4, n);
  r.A5 = part_area_elliptic(AreaPart::A5, n);
  r.A8 = part_area_elliptic(AreaPart::A8, n);
  r.A13 = part_area_elliptic(AreaPart::A13, n);
  r.total = r.A1 + r.A2 + r.A3 + r.A7 + r.A4 + r.A5 + r.A8 + r.A13;
  r.fraction_of_sphere = r.total / (4.0 * kPi);
  return r;
}

double consistency_A2A4A8(int n) {
  const AreaReport r = part_areas(n);
  const double closed = 0.5 * kPi - elliptic_F_imag(0.5 * kPi, solid_constants(n).lambda_C);
  return std::abs(r.A2 + r.A4 + r.A8 - closed);
}

}  // namespace pentamod
