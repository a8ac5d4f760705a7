#pragma once

// Monte Carlo propagation of the additive shock term through the corrected
// forecast.  Reproducibility is part of the contract: draws come from
// SplitMix64 streams through the Box–Muller transform, and every iteration
// seeds its own substream from (seed, iteration index), so the same seed
// gives bit-identical bands at any parallelism degree.

#include <cstdint>
#include <vector>

#include "zetacast/forecast.hpp"

namespace zetacast::stochastic {

// Zero-mean Gaussian shock; the mean is pinned at zero by construction.
struct ShockSpec {
  double std = 0.8;        // percentage points
  int iterations = 5000;   // simulation cycles (1000..5000 typical)
  std::uint64_t seed = 42;
};

struct ForecastBands {
  // One entry per forecast period.
  std::vector<double> mean;
  std::vector<double> std;  // sample std (n-1 denominator)
  std::vector<double> q05;
  std::vector<double> q50;
  std::vector<double> q95;
};

// Simulate `spec.iterations` paths of corrected + std * z and reduce them
// to per-period bands.  `n_threads` > 1 splits iterations across threads;
// results are identical either way.
ForecastBands simulate(const forecast::ForecastSeries& series,
                       const ShockSpec& spec, int n_threads = 1);

// n standard-normal variates from the documented generator: SplitMix64
// (Steele–Lea–Flood finalizer) feeding the trigonometric Box–Muller
// transform, u1 on (0,1], u2 on [0,1).
std::vector<double> gaussian_draws(std::size_t n, std::uint64_t seed);

// Stream form of the same generator.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : state_(seed) {}
  double next();

 private:
  std::uint64_t next_u64();
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Substream seed for iteration `index`: the SplitMix64 finalizer applied to
// seed + golden_gamma * (index + 1).  Documented so external replays can
// reproduce individual paths.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// Linear-interpolation quantile (type-7 convention) on an ascending-sorted
// sample; p in [0, 1].
double quantile_type7(const std::vector<double>& sorted, double p);

} // namespace zetacast::stochastic
