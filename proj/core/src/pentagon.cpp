#include "pentamod/pentagon.hpp"

#include <cmath>

#include "pentamod/error.hpp"
#include "pentamod/projection.hpp"

namespace pentamod {

namespace {

bool antipodal(const UnitVec& u, const UnitVec& v) { return (u.vec() + v.vec()).norm() <= 1e-9; }

bool coincident(const UnitVec& u, const UnitVec& v, double tol) {
  return angular_distance(u, v) <= tol;
}

/// Builds the six edges from the corners, leaving an edge empty when its
/// endpoints coincide.
void build_edges(Pentagon& p) {
  const std::array<UnitVec, 6> c = p.corners();
  for (std::size_t i = 0; i < 6; ++i) {
    const UnitVec& u = c[i];
    const UnitVec& v = c[(i + 1) % 6];
    if (antipodal(u, v)) {
      throw Error(ErrorCode::AntipodalConstruction,
                  std::string("edge ") + std::string(to_string(kEdges[i])) +
                      " joins antipodal points");
    }
    if (angular_distance(u, v) < 1e-12) {
      p.edges[i].reset();
    } else {
      p.edges[i] = minor_arc(u, v);
    }
  }
}

bool adjacent(std::size_t i, std::size_t j) { return j == i + 1 || (i == 0 && j == 5); }

/// Corner shared by adjacent edges i < j.
UnitVec shared_corner(const Pentagon& p, std::size_t i, std::size_t j) {
  const std::array<UnitVec, 6> c = p.corners();
  return (i == 0 && j == 5) ? c[0] : c[j];
}

UnitVec rotate_about(const UnitVec& p, const UnitVec& axis, double angle) {
  return rotate(p, Rotation{axis, angle});
}

}  // namespace

std::string_view to_string(Edge e) {
  switch (e) {
    case Edge::a1: return "a1";
    case Edge::a2: return "a2";
    case Edge::c1: return "c1";
    case Edge::c2: return "c2";
    case Edge::b2: return "b2";
    case Edge::b1: return "b1";
  }
  return "?";
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Crossing: return "crossing";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::EndpointDegenerate: return "endpoint-degenerate";
  }
  return "?";
}

Pentagon anchor_pentagon(int n, const UnitVec& V) {
  const KeyPoints& k = key_points(n);
  if (coincident(V, k.A, kAngularTol) || coincident(V, k.B, kAngularTol)) {
    throw Error(ErrorCode::DegenerateAnchor, "anchor coincides with A or B");
  }
  Pentagon p;
  p.n = n;
  p.V = V;
  p.A = k.A;
  p.B = k.B;
  p.C = k.C;
  p.W = rotate(V, chart_rotation(n, ChartId::A, -2.0 * kPi / 3.0));
  p.E = rotate(V, chart_rotation(n, ChartId::B, 2.0 * kPi / n));
  build_edges(p);
  return p;
}

SimplicityReport is_simple(const Pentagon& p, double tol) {
  SimplicityReport report;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!p.edges[i]) {
      const std::array<UnitVec, 6> c = p.corners();
      report.violations.push_back(
          {kEdges[i], kEdges[(i + 1) % 6], ViolationKind::EndpointDegenerate, c[i]});
    }
  }

  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (!p.edges[i] || !p.edges[j]) continue;
      const ArcIntersection hit = arc_intersect(*p.edges[i], *p.edges[j], tol);
      if (adjacent(i, j)) {
        const UnitVec s = shared_corner(p, i, j);
        if (hit.overlap) {
          if (hit.overlap_length > tol) {
            report.violations.push_back(
                {kEdges[i], kEdges[j], ViolationKind::Overlap, p.edges[i]->midpoint()});
          }
          continue;
        }
        for (const UnitVec& q : hit.points) {
          if (!coincident(q, s, tol)) {
            report.violations.push_back({kEdges[i], kEdges[j], ViolationKind::Crossing, q});
            break;
          }
        }
      } else if (hit.overlap && !hit.points.empty()) {
        report.violations.push_back({kEdges[i], kEdges[j],
                                     hit.overlap_length > tol ? ViolationKind::Overlap
                                                              : ViolationKind::Crossing,
                                     hit.points.front()});
      } else if (!hit.points.empty()) {
        report.violations.push_back(
            {kEdges[i], kEdges[j], ViolationKind::Crossing, hit.points.front()});
      }
    }
  }
  report.simple = report.violations.empty();
  return report;
}

bool oracle_in_moduli(int n, const UnitVec& V) {
  try {
    return is_simple(anchor_pentagon(n, V)).simple;
  } catch (const Error&) {
    return false;
  }
}

std::array<Pentagon, 3> face_pentagons(int n, const UnitVec& V) {
  std::array<Pentagon, 3> out;
  out[0] = anchor_pentagon(n, V);
  const UnitVec axis(chart_frame(n, ChartId::A).e3);
  const std::array<double, 2> angles = {2.0 * kPi / 3.0, -2.0 * kPi / 3.0};
  for (std::size_t k = 0; k < 2; ++k) {
    Pentagon q = out[0];
    for (UnitVec* v : {&q.V, &q.A, &q.W, &q.C, &q.E, &q.B}) *v = rotate_about(*v, axis, angles[k]);
    build_edges(q);
    out[k + 1] = q;
  }
  return out;
}

bool face_tiles(const std::array<Pentagon, 3>& faces, double tol) {
  auto is_corner_of = [tol](const UnitVec& q, const Pentagon& p) {
    for (const UnitVec& c : p.corners()) {
      if (coincident(q, c, tol)) return true;
    }
    return false;
  };
  auto same_arc = [tol](const GreatArc& s, const GreatArc& t) {
    return (coincident(s.u(), t.u(), tol) && coincident(s.v(), t.v(), tol)) ||
           (coincident(s.u(), t.v(), tol) && coincident(s.v(), t.u(), tol));
  };

  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      for (const auto& s : faces[a].edges) {
        for (const auto& t : faces[b].edges) {
          if (!s || !t) continue;
          const ArcIntersection hit = arc_intersect(*s, *t, tol);
          if (hit.overlap && hit.overlap_length > tol) {
            if (!same_arc(*s, *t)) return false;
            continue;
          }
          for (const UnitVec& q : hit.points) {
            if (!is_corner_of(q, faces[a]) || !is_corner_of(q, faces[b])) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace pentamod
