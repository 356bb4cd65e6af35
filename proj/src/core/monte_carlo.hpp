#pragma once

#include <cstdint>

#include "core/squircle.hpp"

namespace sq {

struct MonteCarloArea {
  double area = 0.0;
  double sigma3 = 0.0;  // 3-sigma half-width of the binomial estimator
  std::uint64_t inside = 0;
  std::uint64_t samples = 0;
};

// Hit-count estimate of the squircle area over the clip box [-r, r]^2,
// using the counter-based SplitMix64 stream: sample i draws indices 2i and
// 2i+1, so the result depends only on (seed, n), never on evaluation order.
MonteCarloArea area_montecarlo(const SquircleParams& p, std::uint64_t n,
                               std::uint64_t seed);

}  // namespace sq
