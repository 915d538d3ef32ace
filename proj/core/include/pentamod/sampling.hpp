#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "pentamod/sphere.hpp"

namespace pentamod {

/// Samples are drawn in fixed-size chunks; chunk k uses its own generator
/// seeded from (seed, k), so the sequence is independent of the thread count.
inline constexpr std::uint64_t kSampleChunk = 1u << 14;

/// Uniform point from two uniform variates: height in [-1, 1] and azimuth
/// in [0, 2 pi).
UnitVec uniform_sphere_point(std::mt19937_64& rng);

/// Calls visit(index, point) for every sample index in [0, samples). visit
/// runs concurrently on `threads` workers (0 = hardware concurrency).
void for_each_sphere_sample(std::uint64_t samples, std::uint64_t seed, unsigned threads,
                            const std::function<void(std::uint64_t, const UnitVec&)>& visit);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// 4 pi * hits / samples with hits counted by analytic_in_moduli. Throws
/// Error{InvalidArgument} for fewer than 1000 samples.
MonteCarloEstimate monte_carlo_area(int n, std::uint64_t samples, std::uint64_t seed,
                                    unsigned threads = 0);

}  // namespace pentamod
