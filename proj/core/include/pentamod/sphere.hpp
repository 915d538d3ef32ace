#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace pentamod {

/// Default angular tolerance (radians) for every incidence predicate.
inline constexpr double kAngularTol = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// A point on the unit sphere. Construction always normalizes, so the
/// components satisfy xi1^2 + xi2^2 + xi3^2 = 1 to rounding.
class UnitVec {
 public:
  /// North pole (0, 0, 1).
  UnitVec() = default;
  UnitVec(double xi1, double xi2, double xi3);
  explicit UnitVec(const Vec3& v);

  double xi1() const { return v_.x; }
  double xi2() const { return v_.y; }
  double xi3() const { return v_.z; }
  const Vec3& vec() const { return v_; }

  UnitVec operator-() const { return UnitVec(-v_, Normalized{}); }

 private:
  struct Normalized {};
  UnitVec(const Vec3& v, Normalized) : v_(v) {}

  Vec3 v_{0.0, 0.0, 1.0};
};

inline double dot(const UnitVec& a, const UnitVec& b) { return dot(a.vec(), b.vec()); }
inline double dot(const UnitVec& a, const Vec3& b) { return dot(a.vec(), b); }

/// Right-handed rotation about `axis` by `angle` radians.
struct Rotation {
  UnitVec axis;
  double angle = 0.0;
};

/// Minor great-circle arc from u to v. Only `minor_arc` builds one, so the
/// endpoints are never antipodal or coincident.
class GreatArc {
 public:
  const UnitVec& u() const { return u_; }
  const UnitVec& v() const { return v_; }
  /// Unit normal of the supporting great circle, oriented along u x v.
  const UnitVec& normal() const { return normal_; }
  double length() const { return length_; }

  /// Point at angular offset `t` from u along the arc direction.
  UnitVec at(double t) const;
  UnitVec midpoint() const { return at(0.5 * length_); }
  /// Signed angular position of p's projection on the supporting circle,
  /// measured from u toward v, in (-pi, pi].
  double position_of(const UnitVec& p) const;

 private:
  friend GreatArc minor_arc(const UnitVec& u, const UnitVec& v);
  GreatArc(const UnitVec& u, const UnitVec& v, const UnitVec& n, double len)
      : u_(u), v_(v), normal_(n), length_(len) {}

  UnitVec u_;
  UnitVec v_;
  UnitVec normal_;
  double length_ = 0.0;
};

struct ArcIntersection {
  std::vector<UnitVec> points;
  /// Supporting circles coincide; `points` then holds the endpoints of the
  /// shared sub-arc (empty when the arcs are disjoint on that circle).
  bool overlap = false;
  double overlap_length = 0.0;
};

/// Great-circle distance in [0, pi], via atan2(|u x v|, u . v).
double angular_distance(const UnitVec& u, const UnitVec& v);

UnitVec rotate(const UnitVec& p, const Rotation& r);

/// Throws Error{AntipodalEndpoints} when |u + v| <= 1e-9 and
/// Error{DegenerateArc} when the endpoints are closer than 1e-12.
GreatArc minor_arc(const UnitVec& u, const UnitVec& v);

ArcIntersection arc_intersect(const GreatArc& s, const GreatArc& t, double tol = kAngularTol);

bool point_on_arc(const UnitVec& p, const GreatArc& s, double tol = kAngularTol);

/// Angular distance from p to the great circle with unit normal `normal`.
double distance_to_great_circle(const UnitVec& p, const UnitVec& normal);

}  // namespace pentamod
