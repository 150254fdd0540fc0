#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "parasphere/rng.hpp"

namespace parasphere {

// Splits [0, n) into contiguous per-worker ranges and merges the integer
// tallies by addition. Tallies are functions of the trial index alone, so the
// merged result never depends on the worker count.
template <typename Tally, typename Fn>
Tally sharded_tally(std::uint64_t n, unsigned workers, Fn per_range) {
  workers = std::max(1u, workers);
  if (workers == 1) return per_range(std::uint64_t{0}, n);

  std::vector<Tally> parts(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(n, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk);
    pool.emplace_back([&parts, per_range, w, begin, end] { parts[w] = per_range(begin, end); });
  }
  for (auto& t : pool) t.join();

  Tally total{};
  for (const Tally& p : parts) total += p;
  return total;
}

// Number of trials in [0, n) whose orientation coin lands on +1.
inline std::uint64_t count_plus_orientations(std::uint64_t trials, std::uint64_t seed,
                                             double p_plus, unsigned workers) {
  return sharded_tally<std::uint64_t>(
      trials, workers, [seed, p_plus](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t plus = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
          if (rng::uniform01(rng::trial_word(seed, i)) < p_plus) ++plus;
        }
        return plus;
      });
}

}  // namespace parasphere
