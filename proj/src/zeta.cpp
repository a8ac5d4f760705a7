#include "zetacast/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "zetacast/errors.hpp"

namespace zetacast::zeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLn2 = 0.693147180559945309417232121458176568;

// log(3 + sqrt(8)): per-term error decay rate of the acceleration.
constexpr double kLogDecay = 1.76274717403908605046521864995958461;

// (3 + sqrt(8))^n is carried in long double; past this n even that
// overflows, so the budget is clamped here regardless of the caller's cap.
constexpr std::int64_t kRecurrenceCeiling = 6000;

// Roundoff accumulated in the double-precision eta sum.  Dividing by the
// conversion factor amplifies it, so tolerances below
// kRoundoffFloor / |1 - 2^{1-s}| are unreachable at any term count.
constexpr double kRoundoffFloor = 1e-14;

// Terms needed so that the accelerated eta remainder, after division by
// (1 - 2^{1-s}), lands below tol.  The remainder of the CVZ scheme for a
// totally monotone weight grows on complex arguments roughly like
// 3 (1 + 2|t|) e^{pi |t| / 2}, hence the additive terms below.
std::int64_t needed_terms(const ComplexArg& s, double tol, double denom_mag) {
  const double at = std::abs(s.t);
  double log_target = std::log(3.0) + std::log1p(2.0 * at) + 0.5 * kPi * at;
  log_target += std::max(0.0, -std::log(tol * denom_mag));
  std::int64_t n = static_cast<std::int64_t>(std::ceil(log_target / kLogDecay)) + 8;
  return std::max<std::int64_t>(n, 16);
}

// One pass of the accelerated alternating series
//   eta(s) ~= (1/d) sum_{k=0}^{n-1} c_k (-1)^k (k+1)^{-s}
// with the c_k produced by the Chebyshev recurrence.  The running b/c pair
// is kept in long double because d = (3+sqrt 8)^n leaves double range near
// n ~ 400 while the ratio c/d stays tame.
std::complex<double> eta_accelerated(const ComplexArg& s, std::int64_t n) {
  long double d = std::pow(3.0L + std::sqrt(8.0L), static_cast<long double>(n));
  d = (d + 1.0L / d) / 2.0L;
  long double b = -1.0L;
  long double c = -d;
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t k = 0; k < n; ++k) {
    c = b - c;
    const double l = std::log(static_cast<double>(k + 1));
    // (k+1)^{-s} = e^{-sigma l} (cos(t l) - i sin(t l))
    const std::complex<double> term = std::polar(std::exp(-s.sigma * l), -s.t * l);
    acc += static_cast<double>(c / d) * term;
    b *= static_cast<long double>(k + n) * static_cast<long double>(k - n) /
         ((k + 0.5L) * (k + 1.0L));
  }
  return acc;
}

// Golden-section minimisation of f over [a, b] down to bracket width tol_t.
std::pair<double, double> golden_minimum(const std::function<double(double)>& f,
                                         double a, double b, double tol_t) {
  constexpr double kInvPhi = 0.61803398874989484820458683436563812;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol_t) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, f(mid)};
}

double reduce(const std::complex<double>& value, SignalMode mode) {
  return mode == SignalMode::RealPart ? value.real() : std::abs(value);
}

} // namespace

std::complex<double> evaluate(const ComplexArg& s, const EvalOptions& opts) {
  if (s.sigma < 0.0) {
    throw std::domain_error("zeta: sigma must be >= 0 (eta series route)");
  }
  if (s.sigma == 1.0 && s.t == 0.0) {
    throw std::domain_error("zeta: pole at s = 1");
  }
  if (!(opts.tol > 0.0)) {
    throw std::invalid_argument("zeta: tolerance must be positive");
  }
  if (opts.term_budget <= 0) {
    throw std::invalid_argument("zeta: term budget must be positive");
  }

  // 2^{1-s} and the eta -> zeta conversion factor.
  const std::complex<double> two_pow =
      std::polar(std::exp((1.0 - s.sigma) * kLn2), -s.t * kLn2);
  const std::complex<double> denom = 1.0 - two_pow;
  const double denom_mag = std::abs(denom);

  if (opts.tol * denom_mag < kRoundoffFloor) {
    throw convergence_error(
        "zeta: conversion factor |1 - 2^(1-s)| = " + std::to_string(denom_mag) +
        " near s = " + std::to_string(s.sigma) + " + " + std::to_string(s.t) +
        "i amplifies roundoff beyond the requested tolerance");
  }

  const std::int64_t budget = std::min(opts.term_budget, kRecurrenceCeiling);
  const std::int64_t n = needed_terms(s, opts.tol, denom_mag);
  if (n > budget) {
    throw convergence_error(
        "zeta: tolerance " + std::to_string(opts.tol) + " at t = " +
        std::to_string(s.t) + " needs " + std::to_string(n) +
        " accelerated terms, beyond the budget of " + std::to_string(budget));
  }
  return eta_accelerated(s, n) / denom;
}

std::complex<double> evaluate(const ComplexArg& s, double tol) {
  EvalOptions opts;
  opts.tol = tol;
  return evaluate(s, opts);
}

ZetaSignal sample_signal(const std::vector<double>& t_values, SignalMode mode,
                         const EvalOptions& opts) {
  if (t_values.empty()) {
    throw validation_error("sample_signal: empty t grid");
  }
  for (std::size_t i = 1; i < t_values.size(); ++i) {
    if (!(t_values[i] > t_values[i - 1])) {
      throw validation_error("sample_signal: t grid must be strictly increasing");
    }
  }
  ZetaSignal out;
  out.mode = mode;
  out.samples.reserve(t_values.size());
  double sum = 0.0;
  for (double t : t_values) {
    ZetaSample sample;
    sample.t = t;
    sample.value = evaluate({0.5, t}, opts);
    sample.signal = reduce(sample.value, mode);
    sum += sample.signal;
    out.samples.push_back(sample);
  }
  out.mean = sum / static_cast<double>(out.samples.size());
  return out;
}

ZetaSignal signal_from_values(const std::vector<double>& t_values,
                              const std::vector<double>& signals) {
  if (t_values.empty()) {
    throw validation_error("signal_from_values: empty t grid");
  }
  if (t_values.size() != signals.size()) {
    throw validation_error("signal_from_values: t grid and signal lengths differ");
  }
  for (std::size_t i = 1; i < t_values.size(); ++i) {
    if (!(t_values[i] > t_values[i - 1])) {
      throw validation_error("signal_from_values: t grid must be strictly increasing");
    }
  }
  ZetaSignal out;
  out.mode = SignalMode::RealPart;
  out.samples.reserve(t_values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    out.samples.push_back({t_values[i], {signals[i], 0.0}, signals[i]});
    sum += signals[i];
  }
  out.mean = sum / static_cast<double>(out.samples.size());
  return out;
}

std::vector<ZeroCandidate> locate_zero_candidates(double t_lo, double t_hi,
                                                  double step, double threshold,
                                                  const EvalOptions& opts) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo)) {
    throw std::domain_error("locate_zero_candidates: need 0 < t_lo < t_hi");
  }
  if (!(step > 0.0)) {
    throw std::domain_error("locate_zero_candidates: step must be positive");
  }
  if (!(threshold > 0.0)) {
    throw std::domain_error("locate_zero_candidates: threshold must be positive");
  }

  const auto modulus = [&opts](double t) {
    return std::abs(evaluate({0.5, t}, opts));
  };

  // Grid scan; the +step/2 slack keeps the intended endpoint on the grid
  // when (t_hi - t_lo)/step lands just under an integer.
  std::vector<double> ts;
  std::vector<double> fs;
  for (double t = t_lo; t <= t_hi + step * 1e-9; t += step) {
    ts.push_back(t);
    fs.push_back(modulus(t));
  }

  std::vector<ZeroCandidate> out;
  for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
    if (fs[i] < fs[i - 1] && fs[i] <= fs[i + 1]) {
      auto [t_min, f_min] = golden_minimum(modulus, ts[i - 1], ts[i + 1], 1e-6);
      if (f_min < threshold) {
        out.push_back({t_min, f_min});
      }
    }
  }
  return out;
}

std::vector<DensityPoint> zero_density(const std::vector<ZeroCandidate>& candidates,
                                       double window) {
  if (!(window > 0.0)) {
    throw std::domain_error("zero_density: window must be positive");
  }
  if (candidates.empty()) {
    return {};
  }

  std::vector<double> ts;
  ts.reserve(candidates.size());
  for (const auto& c : candidates) {
    ts.push_back(c.t);
  }
  std::sort(ts.begin(), ts.end());

  const double lo = ts.front();
  const double hi = ts.back();
  std::vector<double> centers;
  const double first = lo + window / 2.0;
  const double last = hi - window / 2.0;
  if (last <= first) {
    // One window already covers the whole candidate span.
    centers.push_back(0.5 * (lo + hi));
  } else {
    for (double c = first; c < last - 1e-12; c += window / 2.0) {
      centers.push_back(c);
    }
    centers.push_back(last);
  }

  std::vector<DensityPoint> out;
  out.reserve(centers.size());
  for (double c : centers) {
    std::size_t count = 0;
    for (double t : ts) {
      if (std::abs(t - c) <= window / 2.0 + 1e-12) {
        ++count;
      }
    }
    out.push_back({c, static_cast<double>(count) / window});
  }
  return out;
}

} // namespace zetacast::zeta
