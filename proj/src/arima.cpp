#include "zetacast/arima.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "zetacast/errors.hpp"

namespace zetacast::arima {

namespace {

void check_spec(const ArimaSpec& spec) {
  if (spec.p < 0 || spec.q < 0 || spec.d < 0) {
    throw validation_error("arima: orders must be nonnegative");
  }
  if (spec.p + spec.q < 1) {
    throw validation_error("arima: need p + q >= 1");
  }
  if (spec.d > 2) {
    throw validation_error("arima: differencing order above 2 is not supported");
  }
}

std::vector<double> difference(const std::vector<double>& x, int d) {
  std::vector<double> w = x;
  for (int round = 0; round < d; ++round) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      w[i] = w[i + 1] - w[i];
    }
    w.pop_back();
  }
  return w;
}

// Schur-Cohn: all roots of 1 - a_1 z - ... - a_k z^k lie outside the unit
// circle iff every reflection coefficient of the downdating recursion has
// magnitude below 1.
bool poly_stable(const std::vector<double>& a) {
  std::vector<double> cur = a;
  for (std::size_t k = cur.size(); k > 0; --k) {
    const double r = cur[k - 1];
    if (!(std::abs(r) < 1.0)) {
      return false;
    }
    const double denom = 1.0 - r * r;
    std::vector<double> next(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      next[i] = (cur[i] + r * cur[k - 2 - i]) / denom;
    }
    cur = std::move(next);
  }
  return true;
}

// MA polynomial 1 + b_1 z + ... maps onto the AR-form test via sign flip.
std::vector<double> negated(const std::vector<double>& b) {
  std::vector<double> out = b;
  for (double& v : out) {
    v = -v;
  }
  return out;
}

// CSS of parameters (ar, ma, c) on the differenced series w.
double css_on_differenced(const std::vector<double>& w,
                          const std::vector<double>& ar,
                          const std::vector<double>& ma, double c) {
  const std::size_t p = ar.size();
  const std::size_t q = ma.size();
  std::vector<double> e(w.size(), 0.0);
  double acc = 0.0;
  for (std::size_t t = p; t < w.size(); ++t) {
    double pred = c;
    for (std::size_t i = 0; i < p; ++i) {
      pred += ar[i] * w[t - 1 - i];
    }
    for (std::size_t j = 0; j < q && j < t; ++j) {
      pred += ma[j] * e[t - 1 - j];
    }
    e[t] = w[t] - pred;
    acc += e[t] * e[t];
  }
  return acc;
}

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
};

// Plain Nelder-Mead (reflection 1, expansion 2, contraction 0.5, shrink
// 0.5).  Terminates when the relative objective spread across the simplex
// drops below tol; throws convergence_error at the evaluation cap.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& start, int max_iter,
                          double tol) {
  const std::size_t dim = start.size();
  std::vector<std::vector<double>> pts(dim + 1, start);
  std::vector<double> vals(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    pts[i + 1][i] += 0.1 * (1.0 + std::abs(start[i]));
  }
  for (std::size_t i = 0; i <= dim; ++i) {
    vals[i] = f(pts[i]);
  }
  int evals = static_cast<int>(dim) + 1;

  std::vector<std::size_t> order(dim + 1);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];

    const double spread = std::abs(vals[worst] - vals[best]);
    if (spread <= tol * (std::abs(vals[worst]) + std::abs(vals[best]) + 1e-10)) {
      return {pts[best], vals[best]};
    }
    if (evals >= max_iter) {
      throw convergence_error("arima: simplex search exhausted " +
                              std::to_string(max_iter) + " evaluations");
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) {
        continue;
      }
      for (std::size_t k = 0; k < dim; ++k) {
        centroid[k] += pts[i][k];
      }
    }
    for (double& v : centroid) {
      v /= static_cast<double>(dim);
    }

    const auto blend = [&](double coeff) {
      std::vector<double> x(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        x[k] = centroid[k] + coeff * (pts[worst][k] - centroid[k]);
      }
      return x;
    };

    const auto reflected = blend(-1.0);
    const double fr = f(reflected);
    ++evals;
    if (fr < vals[best]) {
      const auto expanded = blend(-2.0);
      const double fe = f(expanded);
      ++evals;
      if (fe < fr) {
        pts[worst] = expanded;
        vals[worst] = fe;
      } else {
        pts[worst] = reflected;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = reflected;
      vals[worst] = fr;
      continue;
    }
    const auto contracted = blend(fr < vals[worst] ? -0.5 : 0.5);
    const double fc = f(contracted);
    ++evals;
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) {
        continue;
      }
      for (std::size_t k = 0; k < dim; ++k) {
        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      }
      vals[i] = f(pts[i]);
      ++evals;
    }
  }
}

// Residuals of the fitted model over a differenced history, for seeding the
// forecast recursion with recent innovations.
std::vector<double> residuals_on_differenced(const std::vector<double>& w,
                                             const ArimaFit& fit) {
  const std::size_t p = fit.ar_coeffs.size();
  const std::size_t q = fit.ma_coeffs.size();
  std::vector<double> e(w.size(), 0.0);
  for (std::size_t t = p; t < w.size(); ++t) {
    double pred = fit.intercept;
    for (std::size_t i = 0; i < p; ++i) {
      pred += fit.ar_coeffs[i] * w[t - 1 - i];
    }
    for (std::size_t j = 0; j < q && j < t; ++j) {
      pred += fit.ma_coeffs[j] * e[t - 1 - j];
    }
    e[t] = w[t] - pred;
  }
  return e;
}

} // namespace

bool is_stable(const ArimaFit& fit) {
  return poly_stable(fit.ar_coeffs) && poly_stable(negated(fit.ma_coeffs));
}

double css(const std::vector<double>& series, const ArimaFit& fit) {
  const auto w = difference(series, fit.spec.d);
  return css_on_differenced(w, fit.ar_coeffs, fit.ma_coeffs, fit.intercept);
}

ArimaFit fit(const std::vector<double>& series, const ArimaSpec& spec,
             const FitOptions& options) {
  check_spec(spec);
  const std::size_t need =
      3 * static_cast<std::size_t>(spec.p + spec.q + 1) +
      static_cast<std::size_t>(spec.d);
  if (series.size() < need) {
    throw validation_error("arima: series of length " +
                           std::to_string(series.size()) + " is below the " +
                           std::to_string(need) + " required for (" +
                           std::to_string(spec.p) + "," + std::to_string(spec.d) +
                           "," + std::to_string(spec.q) + ")");
  }

  const auto w = difference(series, spec.d);
  const auto p = static_cast<std::size_t>(spec.p);
  const auto q = static_cast<std::size_t>(spec.q);

  // Parameter vector: (ar..., ma..., mu) in mean form, so the constant
  // search direction is centered on the differenced-series average.
  const double mu0 =
      std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
  std::vector<double> start(p + q + 1, 0.0);
  start.back() = mu0;

  const auto objective = [&](const std::vector<double>& x) {
    const std::vector<double> ar(x.begin(), x.begin() + p);
    const std::vector<double> ma(x.begin() + p, x.begin() + p + q);
    const double mu = x.back();
    double phi_sum = 0.0;
    for (const double v : ar) {
      phi_sum += v;
    }
    const double value = css_on_differenced(w, ar, ma, mu * (1.0 - phi_sum));
    // Explosive AR trials overflow the recursion; a finite cap keeps the
    // simplex comparisons meaningful and steers it back.
    return std::isfinite(value) ? value : 1e30;
  };

  const auto best = nelder_mead(objective, start, options.max_iter, options.tol);

  ArimaFit result;
  result.spec = spec;
  result.ar_coeffs.assign(best.x.begin(), best.x.begin() + p);
  result.ma_coeffs.assign(best.x.begin() + p, best.x.begin() + p + q);
  double phi_sum = 0.0;
  for (const double v : result.ar_coeffs) {
    phi_sum += v;
  }
  result.intercept = best.x.back() * (1.0 - phi_sum);
  const auto terms = static_cast<double>(w.size() - p);
  result.sigma2 = terms > 0.0 ? best.value / terms : 0.0;

  if (!is_stable(result)) {
    throw unstable_error("arima: CSS optimum has a lag-polynomial root on or "
                         "inside the unit circle");
  }
  return result;
}

std::vector<double> forecast(const ArimaFit& fit,
                             const std::vector<double>& history, int horizon) {
  check_spec(fit.spec);
  if (horizon < 0) {
    throw std::invalid_argument("forecast: horizon must be >= 0");
  }
  if (fit.ar_coeffs.size() != static_cast<std::size_t>(fit.spec.p) ||
      fit.ma_coeffs.size() != static_cast<std::size_t>(fit.spec.q)) {
    throw validation_error("forecast: coefficient lists do not match the model order");
  }
  if (!is_stable(fit)) {
    throw unstable_error("forecast: model has unstable roots");
  }
  const std::size_t need = static_cast<std::size_t>(
      std::max(fit.spec.p, fit.spec.q) + fit.spec.d);
  if (history.size() < std::max<std::size_t>(need, 1)) {
    throw validation_error("forecast: history shorter than max(p,q) + d");
  }
  if (horizon == 0) {
    return {};
  }

  // Tail values of every differencing stage, for integrating forecasts
  // back up to levels.
  std::vector<double> stage_last;
  std::vector<double> stage = history;
  for (int k = 0; k < fit.spec.d; ++k) {
    stage_last.push_back(stage.back());
    stage = difference(stage, 1);
  }

  auto w = stage; // fully differenced history
  auto e = residuals_on_differenced(w, fit);

  std::vector<double> levels;
  levels.reserve(static_cast<std::size_t>(horizon));
  for (int h = 0; h < horizon; ++h) {
    double next = fit.intercept;
    for (std::size_t i = 0; i < fit.ar_coeffs.size(); ++i) {
      next += fit.ar_coeffs[i] * w[w.size() - 1 - i];
    }
    for (std::size_t j = 0; j < fit.ma_coeffs.size(); ++j) {
      // Innovation at absolute time m+h-1-j; zero once it falls in the
      // forecast period (only the m in-sample residuals exist).
      const auto idx = static_cast<std::ptrdiff_t>(e.size()) + h - 1 -
                       static_cast<std::ptrdiff_t>(j);
      if (idx >= 0 && idx < static_cast<std::ptrdiff_t>(e.size())) {
        next += fit.ma_coeffs[j] * e[static_cast<std::size_t>(idx)];
      }
    }
    w.push_back(next);

    // Integrate through the differencing stages.
    double value = next;
    for (std::size_t k = stage_last.size(); k > 0; --k) {
      value += stage_last[k - 1];
      stage_last[k - 1] = value;
    }
    levels.push_back(value);
  }
  return levels;
}

std::vector<double> fitted_values(const ArimaFit& fit,
                                  const std::vector<double>& series) {
  check_spec(fit.spec);
  const auto w = difference(series, fit.spec.d);
  const auto e = residuals_on_differenced(w, fit);
  const auto p = static_cast<std::size_t>(fit.spec.p);
  const auto d = static_cast<std::size_t>(fit.spec.d);

  std::vector<double> out = series;
  // w[t] corresponds to level index t + d; its one-step prediction is
  // level - residual.
  for (std::size_t t = p; t < w.size(); ++t) {
    out[t + d] = series[t + d] - e[t];
  }
  return out;
}

} // namespace zetacast::arima
