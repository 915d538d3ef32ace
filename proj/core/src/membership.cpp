#include "pentamod/membership.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "pentamod/curves.hpp"
#include "pentamod/projection.hpp"
#include "pentamod/regions.hpp"

namespace pentamod {

namespace {

enum class Fan { None, GammaA, GammaB, GammaC };

bool is_core(int region) { return region == 1 || region == 2 || region == 3 || region == 7; }

Fan fan_of(int n, int region) {
  if (region == 5) return Fan::GammaA;
  if (region == 13 || (n == 5 && region == 19)) return Fan::GammaB;
  if (region == 4 || region == 8 || (n == 5 && region == 14)) return Fan::GammaC;
  return Fan::None;
}

/// Strictly between the chart origin and the curve, with the angle strictly
/// inside the curve's range.
bool inside_fan(const CurveSpec& spec, const UnitVec& p, double tol) {
  const ChartFrame& f = chart_frame(spec.n, spec.chart);
  const double w = dot(p.vec(), f.e3);
  if (1.0 - w < 1e-12) return false;
  const Complex z{dot(p.vec(), f.e1) / (1.0 - w), dot(p.vec(), f.e2) / (1.0 - w)};
  const double theta = std::arg(z);
  if (!(theta > spec.theta_min && theta < spec.theta_max)) return false;
  const double r = std::abs(z);
  return r < gamma_radius(spec, theta) - 0.5 * tol * (1.0 + r * r);
}

bool inside_fan(int n, Fan fan, const UnitVec& p, double tol) {
  switch (fan) {
    case Fan::GammaA: return inside_fan(curve_spec(CurveKind::GammaA, n), p, tol);
    case Fan::GammaB: return inside_fan(curve_spec(CurveKind::GammaB, n), p, tol);
    case Fan::GammaC: return inside_fan(curve_spec(CurveKind::GammaC_A, n), p, tol);
    case Fan::None: return false;
  }
  return false;
}

std::array<UnitVec, 6> vertices(int n) {
  const KeyPoints& k = key_points(n);
  return {k.A, k.B, k.M, k.C, k.A_prime, k.B_prime};
}

}  // namespace

bool analytic_in_moduli(int n, const UnitVec& p, double tol) {
  for (const UnitVec& v : vertices(n)) {
    if (angular_distance(p, v) <= tol) return false;
  }

  const RegionClass rc = region_of(n, p, tol);
  if (rc.region) {
    if (is_core(*rc.region)) return true;
    return inside_fan(n, fan_of(n, *rc.region), p, tol);
  }

  const std::vector<int>& adj = rc.adjacent;
  const bool touches_core = std::any_of(adj.begin(), adj.end(), is_core);
  if (touches_core) {
    const bool excluded_arc = adj.size() == 2 && adj[1] == 9 && (adj[0] == 3 || adj[0] == 7);
    return !excluded_arc;
  }
  return std::any_of(adj.begin(), adj.end(),
                     [&](int r) { return inside_fan(n, fan_of(n, r), p, tol); });
}

double distance_to_boundary_loci(int n, const UnitVec& p) {
  double d = distance_to_dividing_circles(n, p);
  for (const UnitVec& v : vertices(n)) d = std::min(d, angular_distance(p, v));
  for (CurveKind k : {CurveKind::GammaA, CurveKind::GammaB, CurveKind::GammaC_A}) {
    d = std::min(d, distance_to_gamma_locus(curve_spec(k, n), p));
  }
  return d;
}

}  // namespace pentamod
