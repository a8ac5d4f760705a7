#pragma once

// Discrete Fourier analysis of the cyclical signal
//
//     P(t) = sum_k a_k e^{i omega_k t}
//
// with frequencies reported in angular units.  Normalization puts a unit
// cosine on an exact bin at |a| = 0.5 on each of +/- omega.  Sample n is
// taken to sit at t = n * sample_spacing, so phases are relative to the
// first sample.

#include <complex>
#include <vector>

namespace zetacast::spectral {

struct Spectrum {
  std::vector<double> frequencies;               // omega, ascending, (-pi/dt, pi/dt]
  std::vector<std::complex<double>> amplitudes;  // a_k = X_k / N
  std::vector<double> power;                     // |a_k|^2
};

// Forward transform.  Power-of-two lengths run through an O(N log N)
// radix-2 transform, anything else through the direct O(N^2) sum; at desk
// scale both are instant and bit-agreement is not required between them.
// Throws validation_error for fewer than 2 samples, std::domain_error for a
// non-positive spacing.
Spectrum decompose(const std::vector<double>& signal, double sample_spacing);

// Synthesis sum_k a_k e^{i omega_k t} evaluated on an arbitrary t grid
// (real part; the imaginary residue of a real-input spectrum is roundoff).
// An empty spectrum synthesizes to zeros.
std::vector<double> reconstruct(const Spectrum& spectrum,
                                const std::vector<double>& t_grid);

struct Peak {
  double omega = 0.0;
  double amplitude = 0.0; // |a| at the positive frequency
};

// The k positive-frequency bins with the largest |a|, descending, ties
// toward lower omega.  DC never qualifies; bins with negligible amplitude
// (below 1e-12 of the spectrum maximum) are dropped, so a pure-DC signal
// yields an empty list.  k must be >= 1 and no larger than the number of
// positive-frequency bins.
std::vector<Peak> top_peaks(const Spectrum& spectrum, int k);

// Spectrum restricted to DC plus the top-k peak pairs (+/- omega), for
// truncated re-synthesis.
Spectrum truncate_top(const Spectrum& spectrum, int k);

// Hann taper, for short noisy windows where leakage dominates; off by
// default since it rescales peak heights.
std::vector<double> hann_window(const std::vector<double>& signal);

} // namespace zetacast::spectral
