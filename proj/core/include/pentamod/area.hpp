#pragma once

#include <array>
#include <functional>
#include <string_view>

namespace pentamod {

/// F(t, i/lambda) = integral over [0, t] of du / sqrt(1 + sin^2(u) / lambda^2).
double elliptic_F_imag(double t, double lambda);

/// Area on the sphere of the fan {rho e^{i theta}: 0 <= rho <= r(theta),
/// alpha <= theta <= beta} of a stereographic chart.
double fan_area_quadrature(const std::function<double(double)>& r, double alpha, double beta);

/// Moduli pieces outside the four core triangles. A8 includes Omega_14 and
/// A13 includes Omega_19 when n = 5.
enum class AreaPart { A4, A5, A8, A13 };

inline constexpr std::array<AreaPart, 4> kAreaParts = {AreaPart::A4, AreaPart::A5, AreaPart::A8,
                                                       AreaPart::A13};

std::string_view to_string(AreaPart p);

/// Closed form through elliptic_F_imag.
double part_area_elliptic(AreaPart part, int n);

/// Direct fan quadrature over the bounding curve.
double part_area_quadrature(AreaPart part, int n);

struct AreaReport {
  int n = 0;
  double A1 = 0.0;
  double A2 = 0.0;
  double A3 = 0.0;
  double A7 = 0.0;
  double A4 = 0.0;
  double A5 = 0.0;
  double A8 = 0.0;
  double A13 = 0.0;
  double total = 0.0;
  double fraction_of_sphere = 0.0;
};

AreaReport part_areas(int n);

/// |(A2 + A4 + A8) - (pi/2 - F(pi/2, i/lambda_C))|.
double consistency_A2A4A8(int n);

}  // namespace pentamod
