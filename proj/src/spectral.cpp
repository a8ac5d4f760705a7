#include "zetacast/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zetacast/errors.hpp"

namespace zetacast::spectral {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 decimation-in-time transform (forward sign
// convention e^{-i 2 pi jk / N}).
void fft_radix2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) {
      j ^= bit;
    }
    j ^= bit;
    if (i < j) {
      std::swap(a[i], a[j]);
    }
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wstep{std::cos(angle), std::sin(angle)};
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const auto u = a[i + j];
        const auto v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wstep;
      }
    }
  }
}

std::vector<std::complex<double>> dft_direct(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = -2.0 * kPi * static_cast<double>(j) *
                           static_cast<double>(k) / static_cast<double>(n);
      acc += x[k] * std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    out[j] = acc;
  }
  return out;
}

// Positive-frequency bin indices of a spectrum stored in ascending omega
// order (strictly positive omega, Nyquist included).
std::vector<std::size_t> positive_bins(const Spectrum& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.frequencies.size(); ++i) {
    if (s.frequencies[i] > 0.0) {
      out.push_back(i);
    }
  }
  return out;
}

} // namespace

Spectrum decompose(const std::vector<double>& signal, double sample_spacing) {
  if (signal.size() < 2) {
    throw validation_error("decompose: need at least 2 samples");
  }
  if (!(sample_spacing > 0.0)) {
    throw std::domain_error("decompose: sample spacing must be positive");
  }

  const std::size_t n = signal.size();
  std::vector<std::complex<double>> bins;
  if (is_power_of_two(n)) {
    bins.assign(signal.begin(), signal.end());
    fft_radix2(bins);
  } else {
    bins = dft_direct(signal);
  }

  // Reorder DFT bins j = 0..N-1 onto signed harmonics j' in
  // [-(ceil(N/2)-1), floor(N/2)], ascending, omega = 2 pi j' / (N dt).
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  const auto lowest = half - static_cast<std::ptrdiff_t>(n) + 1;
  Spectrum out;
  out.frequencies.reserve(n);
  out.amplitudes.reserve(n);
  out.power.reserve(n);
  for (std::ptrdiff_t h = lowest; h <= half; ++h) {
    const std::size_t j = static_cast<std::size_t>(h < 0 ? h + static_cast<std::ptrdiff_t>(n) : h);
    const std::complex<double> a = bins[j] / static_cast<double>(n);
    out.frequencies.push_back(2.0 * kPi * static_cast<double>(h) /
                              (static_cast<double>(n) * sample_spacing));
    out.amplitudes.push_back(a);
    out.power.push_back(std::norm(a));
  }
  return out;
}

std::vector<double> reconstruct(const Spectrum& spectrum,
                                const std::vector<double>& t_grid) {
  if (spectrum.frequencies.size() != spectrum.amplitudes.size()) {
    throw validation_error("reconstruct: malformed spectrum");
  }
  std::vector<double> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < spectrum.frequencies.size(); ++k) {
      const double phase = spectrum.frequencies[k] * t;
      acc += spectrum.amplitudes[k] *
             std::complex<double>{std::cos(phase), std::sin(phase)};
    }
    out.push_back(acc.real());
  }
  return out;
}

std::vector<Peak> top_peaks(const Spectrum& spectrum, int k) {
  if (k < 1) {
    throw std::invalid_argument("top_peaks: k must be >= 1");
  }
  const auto pos = positive_bins(spectrum);
  if (static_cast<std::size_t>(k) > pos.size()) {
    throw std::invalid_argument("top_peaks: k = " + std::to_string(k) +
                                " exceeds the " + std::to_string(pos.size()) +
                                " positive-frequency bins");
  }

  double peak_mag = 0.0;
  for (const double p : spectrum.power) {
    peak_mag = std::max(peak_mag, p);
  }
  const double floor = 1e-12 * std::sqrt(peak_mag);

  std::vector<std::size_t> ranked;
  for (const std::size_t i : pos) {
    if (std::abs(spectrum.amplitudes[i]) > floor) {
      ranked.push_back(i);
    }
  }
  std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(spectrum.amplitudes[a]);
    const double mb = std::abs(spectrum.amplitudes[b]);
    // Magnitudes within roundoff of each other count as tied; the lower
    // frequency wins the tie.
    if (std::abs(ma - mb) > 1e-12 * std::max(1.0, std::max(ma, mb))) {
      return ma > mb;
    }
    return spectrum.frequencies[a] < spectrum.frequencies[b];
  });
  if (ranked.size() > static_cast<std::size_t>(k)) {
    ranked.resize(static_cast<std::size_t>(k));
  }

  std::vector<Peak> out;
  out.reserve(ranked.size());
  for (const std::size_t i : ranked) {
    out.push_back({spectrum.frequencies[i], std::abs(spectrum.amplitudes[i])});
  }
  return out;
}

Spectrum truncate_top(const Spectrum& spectrum, int k) {
  const auto peaks = top_peaks(spectrum, k);
  Spectrum out;
  for (std::size_t i = 0; i < spectrum.frequencies.size(); ++i) {
    const double omega = spectrum.frequencies[i];
    const bool is_dc = omega == 0.0;
    const bool kept =
        is_dc || std::any_of(peaks.begin(), peaks.end(), [&](const Peak& p) {
          return std::abs(std::abs(omega) - p.omega) < 1e-12;
        });
    if (kept) {
      out.frequencies.push_back(omega);
      out.amplitudes.push_back(spectrum.amplitudes[i]);
      out.power.push_back(spectrum.power[i]);
    }
  }
  return out;
}

std::vector<double> hann_window(const std::vector<double>& signal) {
  const std::size_t n = signal.size();
  if (n < 2) {
    throw validation_error("hann_window: need at least 2 samples");
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w =
        0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                              static_cast<double>(n - 1)));
    out.push_back(signal[i] * w);
  }
  return out;
}

} // namespace zetacast::spectral
