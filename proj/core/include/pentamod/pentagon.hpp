#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "pentamod/sphere.hpp"

namespace pentamod {

/// Boundary edges in traversal order V -> A -> W -> C -> E -> B -> V.
enum class Edge { a1, a2, c1, c2, b2, b1 };

inline constexpr std::array<Edge, 6> kEdges = {Edge::a1, Edge::a2, Edge::c1,
                                               Edge::c2, Edge::b2, Edge::b1};

std::string_view to_string(Edge e);

struct Pentagon {
  int n = 3;
  UnitVec V, A, W, C, E, B;
  /// Empty when the two endpoints coincide (W = C or E = C).
  std::array<std::optional<GreatArc>, 6> edges;

  const std::optional<GreatArc>& edge(Edge e) const {
    return edges[static_cast<std::size_t>(e)];
  }
  /// Vertices in boundary order, starting from V.
  std::array<UnitVec, 6> corners() const { return {V, A, W, C, E, B}; }
};

enum class ViolationKind { Crossing, Overlap, EndpointDegenerate };

std::string_view to_string(ViolationKind k);

struct Violation {
  Edge first;
  Edge second;
  ViolationKind kind;
  UnitVec witness;
};

struct SimplicityReport {
  bool simple = true;
  std::vector<Violation> violations;
};

/// Throws Error{DegenerateAnchor} when V is within kAngularTol of A or B and
/// Error{AntipodalConstruction} when two consecutive corners are antipodal.
Pentagon anchor_pentagon(int n, const UnitVec& V);

SimplicityReport is_simple(const Pentagon& p, double tol = kAngularTol);

/// Construction failures count as "not in the moduli".
bool oracle_in_moduli(int n, const UnitVec& V);

/// The three pentagons of one face: the anchored pentagon and its images
/// under rotation about A by 2pi/3 and -2pi/3.
std::array<Pentagon, 3> face_pentagons(int n, const UnitVec& V);

/// True when the boundaries of the three face pentagons meet only in shared
/// corners and shared edges.
bool face_tiles(const std::array<Pentagon, 3>& faces, double tol = kAngularTol);

}  // namespace pentamod
