#pragma once

// ARIMA(p,d,q) comparison baseline, fitted by conditional sum of squares:
// difference the series d times, then minimize
//
//     CSS = sum_t e_t^2,   e_t = w_t - c - sum_i ar_i w_{t-i} - sum_j ma_j e_{t-j}
//
// over the coefficients and the constant, with a derivative-free
// Nelder-Mead simplex (no likelihood machinery at desk scale).  The first p
// differenced values condition the recursion and pre-sample innovations are
// zero.

#include <vector>

namespace zetacast::arima {

struct ArimaSpec {
  int p = 1;
  int d = 1;
  int q = 1;
};

struct ArimaFit {
  ArimaSpec spec;
  std::vector<double> ar_coeffs; // length p
  std::vector<double> ma_coeffs; // length q
  double intercept = 0.0;        // constant c of the differenced-series model
  double sigma2 = 0.0;           // innovation variance estimate
};

struct FitOptions {
  int max_iter = 20000; // simplex evaluations
  double tol = 1e-12;   // relative objective spread at termination
};

// Fit by CSS.  Coefficients start at zero and the constant at the
// differenced-series mean.  Throws validation_error for a bad spec or a
// series shorter than 3(p+q+1)+d, convergence_error when the simplex stalls
// past max_iter, and unstable_error when the optimum has AR roots or MA
// roots on or inside the unit circle.
ArimaFit fit(const std::vector<double>& series, const ArimaSpec& spec,
             const FitOptions& options = {});

// Iterated h-step-ahead forecasts, integrated back to levels.  History must
// be at least max(p,q)+d long; future innovations are zero.
std::vector<double> forecast(const ArimaFit& fit,
                             const std::vector<double>& history, int horizon);

// In-sample one-step predictions on the level scale: entry t is the model's
// forecast of series[t] given everything before it.  The first d + p
// entries carry the observed values (nothing to predict them from).
std::vector<double> fitted_values(const ArimaFit& fit,
                                  const std::vector<double>& series);

// CSS of the fit's parameters on a series (differenced per fit.spec).
double css(const std::vector<double>& series, const ArimaFit& fit);

// Both lag polynomials have all roots strictly outside the unit circle
// (Schur-Cohn test on the partial autocorrelations).
bool is_stable(const ArimaFit& fit);

} // namespace zetacast::arima
