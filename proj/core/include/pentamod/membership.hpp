#pragma once

#include "pentamod/sphere.hpp"

namespace pentamod {

/// Closed-form moduli test: region lookup plus one radial comparison against
/// the bounding curve of the region.
bool analytic_in_moduli(int n, const UnitVec& p, double tol = kAngularTol);

/// Lower-bound style distance from p to everything the moduli boundary can be
/// made of: the region vertices, the dividing great circles and the full loci
/// of the three bounding curves.
double distance_to_boundary_loci(int n, const UnitVec& p);

}  // namespace pentamod
