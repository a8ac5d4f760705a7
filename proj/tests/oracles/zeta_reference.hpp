#pragma once

// Test-only zeta reference: straight Euler–Maclaurin summation
//
//   zeta(s) = sum_{k=1}^{N-1} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_{j=1}^{K} B_{2j}/(2j)! * N^{1-s-2j} * prod_{i=0}^{2j-2}(s+i)
//
// carried in 80-bit long double with N growing with |t|.  Deliberately a
// different route from the library's accelerated alternating series, so the
// two implementations can check each other.  Accurate to well below 1e-14
// for sigma >= 0 and |t| <= ~60, which covers every grid the tests use.

#include <cmath>
#include <complex>

namespace oracle {

inline std::complex<long double> zeta_euler_maclaurin(long double sigma,
                                                      long double t) {
  using C = std::complex<long double>;
  // Bernoulli numbers B_2 .. B_24.
  static const long double kBernoulli[] = {
      1.0L / 6,       -1.0L / 30,       1.0L / 42,       -1.0L / 30,
      5.0L / 66,      -691.0L / 2730,   7.0L / 6,        -3617.0L / 510,
      43867.0L / 798, -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730};
  const int K = 12;
  const int N = 40 + static_cast<int>(1.5L * std::fabs(static_cast<double>(t)));

  const C s{sigma, t};
  C sum{0.0L, 0.0L};
  for (int k = 1; k < N; ++k) {
    sum += std::exp(-s * std::log(static_cast<long double>(k)));
  }
  const long double n = static_cast<long double>(N);
  const C n_pow = std::exp(-s * std::log(n)); // N^{-s}
  sum += n_pow * n / (s - 1.0L);              // N^{1-s}/(s-1)
  sum += n_pow * 0.5L;

  C shifted = n_pow / n; // N^{-s-(2j-1)}, starting at j = 1
  C poly = s;            // (s)(s+1)...(s+2j-2), starting at j = 1
  long double factorial = 2.0L; // (2j)!
  for (int j = 1; j <= K; ++j) {
    sum += (kBernoulli[j - 1] / factorial) * poly * shifted;
    poly *= (s + static_cast<long double>(2 * j - 1)) *
            (s + static_cast<long double>(2 * j));
    shifted /= n * n;
    factorial *= static_cast<long double>(2 * j + 1) *
                 static_cast<long double>(2 * j + 2);
  }
  return sum;
}

inline std::complex<double> zeta_reference(double sigma, double t) {
  const auto z = zeta_euler_maclaurin(static_cast<long double>(sigma),
                                      static_cast<long double>(t));
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

} // namespace oracle
