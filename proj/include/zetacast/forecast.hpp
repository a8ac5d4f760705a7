#pragma once

// Cyclical correction of an exogenous baseline inflation forecast:
//
//     corrected_i = baseline_i + alpha * (signal_i - signal_mean)
//
// plus RMSE-grid calibration of alpha and the usual accuracy metrics.
// The baseline is an input here; producing it is someone else's model.

#include <optional>
#include <utility>
#include <vector>

#include "zetacast/zeta.hpp"

namespace zetacast::forecast {

struct ForecastSeries {
  std::vector<double> t;
  std::vector<double> signal;    // zeta signal driving the correction
  std::vector<double> baseline;  // percent
  std::vector<double> corrected; // percent
  std::vector<double> delta;     // alpha * (signal - zeta_mean), percent
  double alpha = 0.5;
  double zeta_mean = 0.0;
};

struct AccuracyReport {
  double rmse = 0.0;
  double mape = 0.0; // percent
};

// Apply the correction.  The anchor defaults to the mean of the supplied
// signal window; pass `zeta_mean` to pin it (e.g. a historical average
// computed elsewhere).  Throws validation_error on length mismatch or a
// non-finite alpha.
ForecastSeries correct(const std::vector<double>& baseline,
                       const zeta::ZetaSignal& signal, double alpha,
                       std::optional<double> zeta_mean = std::nullopt);

struct CalibrationResult {
  double alpha_star = 0.0;
  std::vector<std::pair<double, double>> rmse_curve; // (alpha, rmse) per grid point
};

// Exhaustive search over the alpha grid for the smallest RMSE against
// `actual`; ties break toward the smallest alpha (the more inert forecast).
// The grid must be nonempty and sorted ascending.
CalibrationResult calibrate_alpha(const std::vector<double>& baseline,
                                  const zeta::ZetaSignal& signal,
                                  const std::vector<double>& actual,
                                  const std::vector<double>& grid,
                                  std::optional<double> zeta_mean = std::nullopt);

std::vector<double> default_alpha_grid(); // {0.1, 0.2, ..., 1.0}

double rmse(const std::vector<double>& pred, const std::vector<double>& actual);
// Mean absolute percentage error, in percent; every actual must be nonzero.
double mape(const std::vector<double>& pred, const std::vector<double>& actual);
AccuracyReport accuracy(const std::vector<double>& pred,
                        const std::vector<double>& actual);

} // namespace zetacast::forecast
