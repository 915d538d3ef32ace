#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pentamod/sphere.hpp"

namespace pentamod {

/// Position of a point relative to the 6n regions cut out by the great
/// circles through A at multiples of pi/3 and through B at multiples of pi/n.
struct RegionClass {
  /// Set for points strictly inside one region.
  std::optional<int> region;
  /// Regions touching the point; a single entry for interior points.
  std::vector<int> adjacent;

  bool is_boundary() const { return !region.has_value(); }
};

/// Sector of p about A (0..5) and about B (0..2n-1), measured as polar angles
/// in the A- and B-charts.
std::pair<int, int> sectors_of(int n, const UnitVec& p);

/// Region index 1..6n for a realized sector pair, nullopt otherwise.
std::optional<int> region_from_sectors(int n, int sector_a, int sector_b);

/// Sector pair of region `index` (1..6n).
std::pair<int, int> sectors_of_region(int n, int index);

RegionClass region_of(int n, const UnitVec& p, double tol = kAngularTol);

/// Smallest angular distance from p to any dividing great circle.
double distance_to_dividing_circles(int n, const UnitVec& p);

}  // namespace pentamod
