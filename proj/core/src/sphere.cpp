#include "pentamod/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "pentamod/error.hpp"

namespace pentamod {

namespace {

Vec3 normalize_or_throw(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  return v / n;
}

}  // namespace

UnitVec::UnitVec(double xi1, double xi2, double xi3) : UnitVec(Vec3{xi1, xi2, xi3}) {}

UnitVec::UnitVec(const Vec3& v) : v_(normalize_or_throw(v)) {}

double angular_distance(const UnitVec& u, const UnitVec& v) {
  return std::atan2(cross(u.vec(), v.vec()).norm(), dot(u, v));
}

UnitVec rotate(const UnitVec& p, const Rotation& r) {
  const Vec3& k = r.axis.vec();
  const Vec3& v = p.vec();
  const double c = std::cos(r.angle);
  const double s = std::sin(r.angle);
  return UnitVec(v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c)));
}

GreatArc minor_arc(const UnitVec& u, const UnitVec& v) {
  if ((u.vec() + v.vec()).norm() <= 1e-9) {
    throw Error(ErrorCode::AntipodalEndpoints, "minor arc endpoints are antipodal");
  }
  const double len = angular_distance(u, v);
  if (len < 1e-12) {
    throw Error(ErrorCode::DegenerateArc, "minor arc endpoints coincide");
  }
  return GreatArc(u, v, UnitVec(cross(u.vec(), v.vec())), len);
}

UnitVec GreatArc::at(double t) const {
  const Vec3 tangent = cross(normal_.vec(), u_.vec());
  return UnitVec(u_.vec() * std::cos(t) + tangent * std::sin(t));
}

double GreatArc::position_of(const UnitVec& p) const {
  const Vec3 tangent = cross(normal_.vec(), u_.vec());
  return std::atan2(dot(tangent, p.vec()), dot(u_, p));
}

double distance_to_great_circle(const UnitVec& p, const UnitVec& normal) {
  return std::asin(std::min(1.0, std::abs(dot(p, normal))));
}

bool point_on_arc(const UnitVec& p, const GreatArc& s, double tol) {
  if (distance_to_great_circle(p, s.normal()) > tol) return false;
  const double pos = s.position_of(p);
  return pos >= -tol && pos <= s.length() + tol;
}

ArcIntersection arc_intersect(const GreatArc& s, const GreatArc& t, double tol) {
  ArcIntersection out;
  const Vec3 c = cross(s.normal().vec(), t.normal().vec());

  if (c.norm() < tol) {
    // Same supporting circle: intersect the two angular intervals along s.
    out.overlap = true;
    const bool same_orientation = dot(s.normal(), t.normal()) > 0.0;
    const double start = same_orientation ? s.position_of(t.u()) : s.position_of(t.v());
    const double len_t = t.length();

    double best_lo = 0.0;
    double best_hi = -1.0;
    bool found = false;
    for (int k = -1; k <= 1; ++k) {
      const double a = start + 2.0 * kPi * k;
      const double lo = std::max(0.0, a);
      const double hi = std::min(s.length(), a + len_t);
      if (hi >= lo - tol && (!found || hi - lo > best_hi - best_lo)) {
        best_lo = lo;
        best_hi = hi;
        found = true;
      }
    }
    if (!found) return out;

    out.overlap_length = std::max(0.0, best_hi - best_lo);
    if (out.overlap_length <= tol) {
      out.points.push_back(s.at(std::clamp(0.5 * (best_lo + best_hi), 0.0, s.length())));
    } else {
      out.points.push_back(s.at(best_lo));
      out.points.push_back(s.at(best_hi));
    }
    return out;
  }

  const UnitVec p(c);
  for (const UnitVec& q : {p, -p}) {
    if (point_on_arc(q, s, tol) && point_on_arc(q, t, tol)) out.points.push_back(q);
  }
  return out;
}

}  // namespace pentamod
