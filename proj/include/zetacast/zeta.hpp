#pragma once

// Riemann zeta evaluation on and near the critical line, and the derived
// cyclical signal used by the forecast correction.
//
// Evaluation route: the alternating (Dirichlet eta) series
//
//     eta(s) = sum_{k>=1} (-1)^{k-1} k^{-s},   zeta(s) = eta(s) / (1 - 2^{1-s})
//
// accelerated with the Cohen–Rodriguez Villegas–Zagier scheme, which drives
// the error down like (3 + sqrt(8))^{-n} at the cost of one Chebyshev-style
// coefficient recurrence per term.  The eta series converges for sigma > 0
// and the acceleration keeps it practical on the critical line for |t| well
// past the first few hundred zeros.

#include <complex>
#include <cstdint>
#include <vector>

namespace zetacast::zeta {

// Point s = sigma + i t.  The eta route needs sigma >= 0 and s != 1; the
// pole at s = 1 and the half-plane sigma < 0 are rejected at evaluation.
struct ComplexArg {
  double sigma = 0.5;
  double t = 0.0;
};

struct EvalOptions {
  double tol = 1e-10;                   // absolute error target on zeta(s)
  std::int64_t term_budget = 1'000'000; // hard cap on accelerated terms
};

// Accelerated eta-series evaluation.  Throws std::domain_error for s = 1 or
// sigma < 0, std::invalid_argument for tol <= 0, and convergence_error when
// the requested tolerance cannot be met within the term budget.
std::complex<double> evaluate(const ComplexArg& s, const EvalOptions& opts = {});
std::complex<double> evaluate(const ComplexArg& s, double tol);

// Scalar signal extracted from zeta(1/2 + i t).
enum class SignalMode {
  RealPart, // Re zeta(1/2 + i t)
  Modulus,  // |zeta(1/2 + i t)|
};

struct ZetaSample {
  double t = 0.0;
  std::complex<double> value; // zeta(1/2 + i t)
  double signal = 0.0;        // value reduced per the signal mode
};

struct ZetaSignal {
  std::vector<ZetaSample> samples;
  SignalMode mode = SignalMode::RealPart;
  double mean = 0.0; // arithmetic mean of the signal values (the anchor)
};

// Evaluate the signal on a strictly increasing grid of t values.
ZetaSignal sample_signal(const std::vector<double>& t_values,
                         SignalMode mode = SignalMode::RealPart,
                         const EvalOptions& opts = {});

// Wrap precomputed signal values (fixture series) without re-evaluating
// zeta.  Each sample stores its scalar as value = (signal, 0), which keeps
// the real-part reduction consistent.
ZetaSignal signal_from_values(const std::vector<double>& t_values,
                              const std::vector<double>& signals);

// Local minimum of |zeta(1/2 + i t)| that dips below the search threshold.
struct ZeroCandidate {
  double t = 0.0;
  double abs_value = 0.0;
};

// Scan |zeta(1/2 + i t)| on a uniform grid over [t_lo, t_hi], then refine
// each interior local minimum by golden-section search until the bracket is
// narrower than 1e-6.  Candidates whose refined modulus stays at or above
// `threshold` are discarded.  Requires 0 < t_lo < t_hi, step > 0 and
// threshold > 0.
std::vector<ZeroCandidate> locate_zero_candidates(double t_lo, double t_hi,
                                                  double step, double threshold,
                                                  const EvalOptions& opts = {});

struct DensityPoint {
  double window_center = 0.0;
  double density = 0.0; // candidates per unit t inside the window
};

// Sliding-window density of zero candidates.  Windows of width `window` are
// centred from lo + window/2 to hi - window/2 in half-window steps (a single
// window centred on the span when it already covers all candidates).  Empty
// input yields an empty profile.
std::vector<DensityPoint> zero_density(const std::vector<ZeroCandidate>& candidates,
                                       double window);

} // namespace zetacast::zeta
