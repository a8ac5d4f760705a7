#include "zetacast/forecast.hpp"

#include <cmath>
#include <string>

#include "zetacast/errors.hpp"

namespace zetacast::forecast {

ForecastSeries correct(const std::vector<double>& baseline,
                       const zeta::ZetaSignal& signal, double alpha,
                       std::optional<double> zeta_mean) {
  if (baseline.size() != signal.samples.size()) {
    throw validation_error("correct: baseline has " +
                           std::to_string(baseline.size()) + " entries, signal " +
                           std::to_string(signal.samples.size()));
  }
  if (baseline.empty()) {
    throw validation_error("correct: empty forecast");
  }
  if (!std::isfinite(alpha)) {
    throw validation_error("correct: alpha must be finite");
  }

  ForecastSeries out;
  out.alpha = alpha;
  out.zeta_mean = zeta_mean.value_or(signal.mean);
  const std::size_t n = baseline.size();
  out.t.reserve(n);
  out.signal.reserve(n);
  out.baseline = baseline;
  out.corrected.reserve(n);
  out.delta.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = signal.samples[i];
    const double delta = alpha * (s.signal - out.zeta_mean);
    out.t.push_back(s.t);
    out.signal.push_back(s.signal);
    out.delta.push_back(delta);
    out.corrected.push_back(baseline[i] + delta);
  }
  return out;
}

CalibrationResult calibrate_alpha(const std::vector<double>& baseline,
                                  const zeta::ZetaSignal& signal,
                                  const std::vector<double>& actual,
                                  const std::vector<double>& grid,
                                  std::optional<double> zeta_mean) {
  if (grid.empty()) {
    throw validation_error("calibrate_alpha: empty grid");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw validation_error("calibrate_alpha: grid must be sorted ascending");
    }
  }
  if (actual.size() != baseline.size()) {
    throw validation_error("calibrate_alpha: actual has " +
                           std::to_string(actual.size()) +
                           " entries, baseline " +
                           std::to_string(baseline.size()));
  }

  CalibrationResult result;
  result.rmse_curve.reserve(grid.size());
  double best = 0.0;
  for (const double alpha : grid) {
    const auto series = correct(baseline, signal, alpha, zeta_mean);
    const double err = rmse(series.corrected, actual);
    result.rmse_curve.emplace_back(alpha, err);
    // Strict improvement only: equal RMSE keeps the earlier (smaller) alpha.
    if (result.rmse_curve.size() == 1 || err < best) {
      best = err;
      result.alpha_star = alpha;
    }
  }
  return result;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  grid.reserve(10);
  for (int i = 1; i <= 10; ++i) {
    grid.push_back(static_cast<double>(i) / 10.0);
  }
  return grid;
}

double rmse(const std::vector<double>& pred, const std::vector<double>& actual) {
  if (pred.size() != actual.size()) {
    throw validation_error("rmse: length mismatch");
  }
  if (pred.empty()) {
    throw validation_error("rmse: empty input");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - actual[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(pred.size()));
}

double mape(const std::vector<double>& pred, const std::vector<double>& actual) {
  if (pred.size() != actual.size()) {
    throw validation_error("mape: length mismatch");
  }
  if (pred.empty()) {
    throw validation_error("mape: empty input");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (actual[i] == 0.0) {
      throw std::domain_error("mape: actual value at index " + std::to_string(i) +
                              " is zero");
    }
    acc += std::abs(pred[i] - actual[i]) / std::abs(actual[i]);
  }
  return 100.0 * acc / static_cast<double>(pred.size());
}

AccuracyReport accuracy(const std::vector<double>& pred,
                        const std::vector<double>& actual) {
  return {rmse(pred, actual), mape(pred, actual)};
}

} // namespace zetacast::forecast
