#include "pentamod/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "pentamod/error.hpp"
#include "pentamod/membership.hpp"
#include "pentamod/projection.hpp"

namespace pentamod {

namespace {

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::mt19937_64 chunk_generator(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

unsigned resolve_threads(unsigned threads, std::uint64_t chunks) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));
}

}  // namespace

UnitVec uniform_sphere_point(std::mt19937_64& rng) {
  const double z = 2.0 * unit_interval(rng) - 1.0;
  const double phi = 2.0 * kPi * unit_interval(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVec(s * std::cos(phi), s * std::sin(phi), z);
}

void for_each_sphere_sample(std::uint64_t samples, std::uint64_t seed, unsigned threads,
                            const std::function<void(std::uint64_t, const UnitVec&)>& visit) {
  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      std::mt19937_64 rng = chunk_generator(seed, c);
      const std::uint64_t begin = c * kSampleChunk;
      const std::uint64_t end = std::min(samples, begin + kSampleChunk);
      for (std::uint64_t i = begin; i < end; ++i) visit(i, uniform_sphere_point(rng));
    }
  };

  const unsigned count = resolve_threads(threads, chunks);
  if (count == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

MonteCarloEstimate monte_carlo_area(int n, std::uint64_t samples, std::uint64_t seed,
                                    unsigned threads) {
  solid_constants(n);
  if (samples < 1000) {
    throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs at least 1000 samples");
  }
  std::atomic<std::uint64_t> hits{0};
  for_each_sphere_sample(samples, seed, threads, [&](std::uint64_t, const UnitVec& p) {
    if (analytic_in_moduli(n, p)) hits.fetch_add(1, std::memory_order_relaxed);
  });

  MonteCarloEstimate out;
  out.samples = samples;
  out.hits = hits.load();
  const double p = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.estimate = 4.0 * kPi * p;
  out.std_error = 4.0 * kPi * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return out;
}

}  // namespace pentamod
