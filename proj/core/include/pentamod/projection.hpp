#pragma once

#include <complex>

#include "pentamod/sphere.hpp"

namespace pentamod {

using Complex = std::complex<double>;

enum class ChartId { A, B, M };

char to_char(ChartId c);

/// Per-family constants. n is the number of faces meeting at B (3, 4, 5),
/// N the face count of the solid.
struct SolidConstants {
  int n = 0;
  int N = 0;
  double d_AB = 0.0;
  double d_AM = 0.0;
  double d_BM = 0.0;
  double lambda_A = 0.0;
  double lambda_B = 0.0;
  double lambda_C = 0.0;
};

/// Throws Error{UnsupportedSolid} for n outside {3, 4, 5}.
const SolidConstants& solid_constants(int n);

/// (d^-1 - d) tan(pi/3) - (d^-1 + d) tan((1/2 - 1/n) pi) at d = d_AB.
double tan_equation_residual(const SolidConstants& c);

struct ChartPoint {
  Complex z;
  ChartId chart = ChartId::M;
  int n = 3;
};

/// Orthonormal frame of a chart in world coordinates. The chart origin X
/// sits at -e3; the positive real axis points along e1.
struct ChartFrame {
  Vec3 e1;
  Vec3 e2;
  Vec3 e3;
};

const ChartFrame& chart_frame(int n, ChartId chart);

/// Distinguished sphere points of the base triangle: face center A, vertex B,
/// edge midpoint M, the pentagon junction C and the rotated images
/// A' (of A about B) and B' (of B about A).
struct KeyPoints {
  UnitVec A;
  UnitVec B;
  UnitVec M;
  UnitVec C;
  UnitVec A_prime;
  UnitVec B_prime;
};

const KeyPoints& key_points(int n);

UnitVec to_sphere(const ChartPoint& p);
UnitVec to_sphere(Complex z, ChartId chart, int n);

/// Throws Error{AntipodeOfOrigin} when 1 - xi3 < 1e-12 in the chart frame.
ChartPoint to_chart(const UnitVec& p, ChartId chart, int n);

/// Rotation of the sphere that acts as z -> z e^{i angle} in `chart`.
Rotation chart_rotation(int n, ChartId chart, double angle);

/// Point of the extended complex plane.
struct ExtComplex {
  Complex z;
  bool infinite = false;

  static ExtComplex infinity() { return {Complex{}, true}; }
};

class MobiusMap {
 public:
  /// Throws Error{SingularMap} when |ad - bc| <= 1e-12.
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

  ExtComplex apply(Complex z) const;
  ExtComplex apply(const ExtComplex& z) const;
  MobiusMap inverse() const;
  /// (*this) after `inner`.
  MobiusMap compose(const MobiusMap& inner) const;

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

 private:
  Complex a_, b_, c_, d_;
};

MobiusMap mobius_M_to_A(int n);
MobiusMap mobius_M_to_B(int n);

}  // namespace pentamod
