#include "pentamod/regions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "pentamod/error.hpp"
#include "pentamod/projection.hpp"

namespace pentamod {

namespace {

using SectorPair = std::pair<int, int>;

// Region i (1-based) sits at sector pair table[i - 1], read off the label
// positions of the region pictures.
constexpr std::array<SectorPair, 18> kTable3 = {{
    {0, 2}, {5, 3}, {1, 2}, {4, 3}, {2, 2}, {3, 3}, {0, 1}, {5, 4}, {1, 1},
    {4, 4}, {2, 1}, {3, 4}, {0, 0}, {5, 5}, {1, 0}, {4, 5}, {2, 0}, {3, 5},
}};

constexpr std::array<SectorPair, 24> kTable4 = {{
    {0, 3}, {5, 4}, {1, 3}, {4, 4}, {2, 3}, {3, 4}, {0, 2}, {5, 5},
    {1, 2}, {4, 5}, {2, 2}, {3, 5}, {0, 1}, {5, 6}, {1, 1}, {4, 6},
    {2, 1}, {3, 6}, {0, 0}, {5, 7}, {1, 0}, {4, 7}, {2, 0}, {3, 7},
}};

constexpr std::array<SectorPair, 30> kTable5 = {{
    {0, 4}, {5, 5}, {1, 4}, {4, 5}, {2, 4}, {3, 5}, {0, 3}, {5, 6}, {1, 3}, {4, 6},
    {2, 3}, {3, 6}, {0, 2}, {5, 7}, {1, 2}, {4, 7}, {2, 2}, {3, 7}, {0, 1}, {5, 8},
    {1, 1}, {4, 8}, {2, 1}, {3, 8}, {0, 0}, {5, 9}, {1, 0}, {4, 9}, {2, 0}, {3, 9},
}};

const SectorPair* table_for(int n, std::size_t& size) {
  switch (n) {
    case 3: size = kTable3.size(); return kTable3.data();
    case 4: size = kTable4.size(); return kTable4.data();
    case 5: size = kTable5.size(); return kTable5.data();
    default: break;
  }
  throw Error(ErrorCode::UnsupportedSolid, "n must be 3, 4 or 5, got " + std::to_string(n));
}

struct PolarInFrame {
  double angle;
  double tangential;  // sine of the angular distance to the chart origin
};

PolarInFrame polar_in_frame(const UnitVec& p, const ChartFrame& f) {
  const double x = dot(p.vec(), f.e1);
  const double y = dot(p.vec(), f.e2);
  return {std::atan2(y, x), std::hypot(x, y)};
}

int sector_index(double angle, double width, int count) {
  const int s = static_cast<int>(std::floor(angle / width));
  return ((s % count) + count) % count;
}

/// Sectors touching p about one center. `count` sectors of angular width
/// `width`; circles through the center are at multiples of `width`.
std::vector<int> candidate_sectors(const UnitVec& p, const ChartFrame& f, double width, int count,
                                   double tol) {
  const PolarInFrame pf = polar_in_frame(p, f);
  std::vector<int> out;
  if (pf.tangential <= std::sin(tol)) {
    for (int s = 0; s < count; ++s) out.push_back(s);
    return out;
  }
  const double nearest_ray = std::round(pf.angle / width) * width;
  const double off_circle = std::asin(std::min(1.0, pf.tangential * std::abs(std::sin(pf.angle - nearest_ray))));
  if (off_circle <= tol) {
    out.push_back(sector_index(nearest_ray - 0.5 * width, width, count));
    out.push_back(sector_index(nearest_ray + 0.5 * width, width, count));
  } else {
    out.push_back(sector_index(pf.angle, width, count));
  }
  return out;
}

}  // namespace

std::pair<int, int> sectors_of(int n, const UnitVec& p) {
  const PolarInFrame a = polar_in_frame(p, chart_frame(n, ChartId::A));
  const PolarInFrame b = polar_in_frame(p, chart_frame(n, ChartId::B));
  return {sector_index(a.angle, kPi / 3.0, 6), sector_index(b.angle, kPi / n, 2 * n)};
}

std::optional<int> region_from_sectors(int n, int sector_a, int sector_b) {
  std::size_t size = 0;
  const SectorPair* table = table_for(n, size);
  for (std::size_t i = 0; i < size; ++i) {
    if (table[i].first == sector_a && table[i].second == sector_b) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::pair<int, int> sectors_of_region(int n, int index) {
  std::size_t size = 0;
  const SectorPair* table = table_for(n, size);
  if (index < 1 || static_cast<std::size_t>(index) > size) {
    throw Error(ErrorCode::OutOfRange, "region index out of range");
  }
  return table[index - 1];
}

RegionClass region_of(int n, const UnitVec& p, double tol) {
  const std::vector<int> sa =
      candidate_sectors(p, chart_frame(n, ChartId::A), kPi / 3.0, 6, tol);
  const std::vector<int> sb = candidate_sectors(p, chart_frame(n, ChartId::B), kPi / n, 2 * n, tol);

  std::set<int> regions;
  for (int a : sa) {
    for (int b : sb) {
      if (auto r = region_from_sectors(n, a, b)) regions.insert(*r);
    }
  }

  RegionClass out;
  out.adjacent.assign(regions.begin(), regions.end());
  if (sa.size() == 1 && sb.size() == 1 && out.adjacent.size() == 1) out.region = out.adjacent.front();
  return out;
}

double distance_to_dividing_circles(int n, const UnitVec& p) {
  auto distance_about = [&p](const ChartFrame& f, double width) {
    const PolarInFrame pf = polar_in_frame(p, f);
    const double nearest_ray = std::round(pf.angle / width) * width;
    return std::asin(std::min(1.0, pf.tangential * std::abs(std::sin(pf.angle - nearest_ray))));
  };
  return std::min(distance_about(chart_frame(n, ChartId::A), kPi / 3.0),
                  distance_about(chart_frame(n, ChartId::B), kPi / n));
}

}  // namespace pentamod
