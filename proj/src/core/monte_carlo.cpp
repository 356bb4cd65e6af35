#include "core/monte_carlo.hpp"

#include <cmath>

#include "core/rng.hpp"

namespace sq {

MonteCarloArea area_montecarlo(const SquircleParams& p, std::uint64_t n,
                               std::uint64_t seed) {
  validate(p);
  if (n == 0) throw Error(ErrorCode::Argument, "sample count must be positive");
  const double k = p.s / p.r;
  const double r2 = p.r * p.r;
  std::uint64_t inside = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = (2.0 * uniform01(seed, 2 * i) - 1.0) * p.r;
    const double y = (2.0 * uniform01(seed, 2 * i + 1) - 1.0) * p.r;
    const double x2 = x * x, y2 = y * y;
    if (x2 + y2 - k * k * x2 * y2 <= r2) ++inside;
  }
  MonteCarloArea out;
  out.inside = inside;
  out.samples = n;
  const double box = 4.0 * r2;
  const double frac = static_cast<double>(inside) / static_cast<double>(n);
  out.area = box * frac;
  out.sigma3 = 3.0 * box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(n));
  return out;
}

}  // namespace sq
