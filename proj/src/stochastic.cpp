#include "zetacast/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "zetacast/errors.hpp"

namespace zetacast::stochastic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_spec(const ShockSpec& spec) {
  if (!(spec.std > 0.0)) {
    throw validation_error("simulate: shock std must be > 0");
  }
  if (spec.iterations < 1) {
    throw validation_error("simulate: iterations must be >= 1");
  }
}

} // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix_finalize(seed + kGoldenGamma * (index + 1));
}

std::uint64_t NormalStream::next_u64() {
  state_ += kGoldenGamma;
  return splitmix_finalize(state_);
}

double NormalStream::next() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // 53-bit uniforms: u1 in (0,1] keeps the log finite, u2 in [0,1).
  const double u1 =
      (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  cached_ = r * std::sin(kTwoPi * u2);
  has_cached_ = true;
  return r * std::cos(kTwoPi * u2);
}

std::vector<double> gaussian_draws(std::size_t n, std::uint64_t seed) {
  if (n < 1) {
    throw validation_error("gaussian_draws: n must be >= 1");
  }
  NormalStream stream(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(stream.next());
  }
  return out;
}

double quantile_type7(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) {
    throw validation_error("quantile: empty sample");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("quantile: p must lie in [0, 1]");
  }
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) {
    return sorted.back();
  }
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

ForecastBands simulate(const forecast::ForecastSeries& series,
                       const ShockSpec& spec, int n_threads) {
  check_spec(spec);
  const std::size_t periods = series.corrected.size();
  if (periods == 0) {
    throw validation_error("simulate: empty forecast series");
  }
  const auto iterations = static_cast<std::size_t>(spec.iterations);

  // samples[p] holds the simulated value of period p for every iteration,
  // written at the iteration's own index -- the layout makes the result
  // independent of how iterations are distributed over threads.
  std::vector<std::vector<double>> samples(periods,
                                           std::vector<double>(iterations));
  const auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      NormalStream stream(substream_seed(spec.seed, i));
      for (std::size_t p = 0; p < periods; ++p) {
        samples[p][i] = series.corrected[p] + spec.std * stream.next();
      }
    }
  };

  if (n_threads <= 1 || iterations < 2) {
    run_range(0, iterations);
  } else {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(n_threads), iterations);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (iterations + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(begin + chunk, iterations);
      if (begin < end) {
        pool.emplace_back(run_range, begin, end);
      }
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  ForecastBands bands;
  bands.mean.reserve(periods);
  bands.std.reserve(periods);
  bands.q05.reserve(periods);
  bands.q50.reserve(periods);
  bands.q95.reserve(periods);
  for (std::size_t p = 0; p < periods; ++p) {
    auto& column = samples[p];
    double sum = 0.0;
    for (const double v : column) {
      sum += v;
    }
    const double mean = sum / static_cast<double>(iterations);
    double ss = 0.0;
    for (const double v : column) {
      ss += (v - mean) * (v - mean);
    }
    const double sd = iterations > 1
                          ? std::sqrt(ss / static_cast<double>(iterations - 1))
                          : 0.0;
    std::sort(column.begin(), column.end());
    bands.mean.push_back(mean);
    bands.std.push_back(sd);
    bands.q05.push_back(quantile_type7(column, 0.05));
    bands.q50.push_back(quantile_type7(column, 0.50));
    bands.q95.push_back(quantile_type7(column, 0.95));
  }
  return bands;
}

} // namespace zetacast::stochastic
