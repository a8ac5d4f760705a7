#include "zetacast/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zetacast/errors.hpp"

namespace zetacast::hmm {

namespace {

constexpr double kRowSumTol = 1e-9;
constexpr double kStdFloor = 1e-4;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_density(const GaussianEmission& e, double x) {
  const double z = (x - e.mean) / e.std;
  return -0.5 * z * z - std::log(e.std) -
         0.5 * std::log(2.0 * std::numbers::pi);
}

double log_sum_exp(const std::vector<double>& v) {
  const double m = *std::max_element(v.begin(), v.end());
  if (m == kNegInf) {
    return kNegInf;
  }
  double acc = 0.0;
  for (const double x : v) {
    acc += std::exp(x - m);
  }
  return m + std::log(acc);
}

void check_probability_vector(const std::vector<double>& v,
                              const std::string& what) {
  double sum = 0.0;
  for (const double p : v) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw validation_error(what + " has a probability outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRowSumTol) {
    std::ostringstream msg;
    msg << what << " sums to " << sum << ", expected 1";
    throw validation_error(msg.str());
  }
}

void check_observations(const std::vector<double>& obs) {
  if (obs.empty()) {
    throw validation_error("observation sequence is empty");
  }
  for (std::size_t t = 0; t < obs.size(); ++t) {
    if (!std::isfinite(obs[t])) {
      std::ostringstream msg;
      msg << "observation " << t << " is not finite";
      throw validation_error(msg.str());
    }
  }
}

std::vector<double> log_vector(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] > 0.0 ? std::log(v[i]) : kNegInf;
  }
  return out;
}

// Unnormalized log forward variables: alpha[t][i] = log P(O_{1:t}, s_t = i).
std::vector<std::vector<double>> log_forward(const HmmModel& model,
                                             const std::vector<double>& obs) {
  const std::size_t n = model.state_count();
  const std::size_t T = obs.size();
  const auto log_init = log_vector(model.initial);
  std::vector<std::vector<double>> log_trans(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_trans[i] = log_vector(model.transition[i]);
  }

  std::vector<std::vector<double>> alpha(T, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    alpha[0][i] = log_init[i] + log_density(model.emissions[i], obs[0]);
  }
  std::vector<double> terms(n);
  for (std::size_t t = 1; t < T; ++t) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        terms[i] = alpha[t - 1][i] + log_trans[i][j];
      }
      alpha[t][j] = log_sum_exp(terms) + log_density(model.emissions[j], obs[t]);
    }
  }

  for (std::size_t t = 0; t < T; ++t) {
    if (*std::max_element(alpha[t].begin(), alpha[t].end()) == kNegInf) {
      std::ostringstream msg;
      msg << "observation sequence has zero probability under every state "
             "at step "
          << t;
      throw underflow_error(msg.str());
    }
  }
  return alpha;
}

// Log backward variables: beta[t][i] = log P(O_{t+1:T} | s_t = i).
std::vector<std::vector<double>> log_backward(const HmmModel& model,
                                              const std::vector<double>& obs) {
  const std::size_t n = model.state_count();
  const std::size_t T = obs.size();
  std::vector<std::vector<double>> log_trans(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_trans[i] = log_vector(model.transition[i]);
  }

  std::vector<std::vector<double>> beta(T, std::vector<double>(n, 0.0));
  std::vector<double> terms(n);
  for (std::size_t t = T - 1; t-- > 0;) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        terms[j] = log_trans[i][j] +
                   log_density(model.emissions[j], obs[t + 1]) +
                   beta[t + 1][j];
      }
      beta[t][i] = log_sum_exp(terms);
    }
  }
  return beta;
}

} // namespace

void HmmModel::validate() const {
  const std::size_t n = states.size();
  if (n == 0) {
    throw validation_error("model has no states");
  }
  if (initial.size() != n || transition.size() != n || emissions.size() != n) {
    throw validation_error(
        "initial, transition, and emissions must all match the state count");
  }
  check_probability_vector(initial, "initial distribution");
  for (std::size_t i = 0; i < n; ++i) {
    if (transition[i].size() != n) {
      throw validation_error("transition matrix is not square");
    }
    check_probability_vector(transition[i],
                             "transition row for state " + states[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(emissions[i].mean)) {
      throw validation_error("emission mean for state " + states[i] +
                             " is not finite");
    }
    if (!(emissions[i].std > 0.0) || !std::isfinite(emissions[i].std)) {
      throw validation_error("emission std for state " + states[i] +
                             " must be positive");
    }
  }
}

std::vector<std::string> default_phase_labels() {
  return {"Stable", "Growth", "Volatile", "Crash"};
}

HmmModel default_phase_model() {
  HmmModel model;
  model.states = default_phase_labels();
  model.transition = {
      {0.78, 0.15, 0.05, 0.02},
      {0.20, 0.65, 0.10, 0.05},
      {0.10, 0.25, 0.50, 0.15},
      {0.05, 0.20, 0.30, 0.45},
  };
  model.initial = stationary_distribution(model.transition);
  // Typical inflation levels per phase, in percent.
  model.emissions = {
      {3.0, 0.8},  // Stable: near-target inflation
      {5.0, 1.2},  // Growth: demand-driven drift
      {8.0, 2.5},  // Volatile: wide swings
      {13.0, 3.5}, // Crash: shock spikes
  };
  model.validate();
  return model;
}

std::vector<double> stationary_distribution(
    const std::vector<std::vector<double>>& transition) {
  const std::size_t n = transition.size();
  if (n == 0) {
    throw validation_error("transition matrix is empty");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (transition[i].size() != n) {
      throw validation_error("transition matrix is not square");
    }
    check_probability_vector(transition[i], "transition row");
  }

  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  constexpr int kMaxIter = 100000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        next[j] += v[i] * transition[i][j];
      }
    }
    double sum = 0.0;
    for (const double x : next) {
      sum += x;
    }
    double delta = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      next[j] /= sum;
      delta = std::max(delta, std::abs(next[j] - v[j]));
    }
    v.swap(next);
    if (delta < 1e-14) {
      return v;
    }
  }
  throw convergence_error(
      "stationary distribution did not converge (periodic chain?)");
}

ForwardResult forward_filter(const HmmModel& model,
                             const std::vector<double>& obs) {
  model.validate();
  check_observations(obs);

  const auto alpha = log_forward(model, obs);
  const std::size_t n = model.state_count();
  const std::size_t T = obs.size();

  ForwardResult result;
  result.posterior.assign(T, std::vector<double>(n));
  for (std::size_t t = 0; t < T; ++t) {
    const double norm = log_sum_exp(alpha[t]);
    for (std::size_t i = 0; i < n; ++i) {
      result.posterior[t][i] = std::exp(alpha[t][i] - norm);
    }
  }
  result.log_likelihood = log_sum_exp(alpha[T - 1]);
  return result;
}

ViterbiResult viterbi(const HmmModel& model, const std::vector<double>& obs) {
  model.validate();
  check_observations(obs);

  const std::size_t n = model.state_count();
  const std::size_t T = obs.size();
  const auto log_init = log_vector(model.initial);
  std::vector<std::vector<double>> log_trans(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_trans[i] = log_vector(model.transition[i]);
  }

  std::vector<std::vector<double>> delta(T, std::vector<double>(n));
  std::vector<std::vector<std::size_t>> psi(T, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    delta[0][i] = log_init[i] + log_density(model.emissions[i], obs[0]);
  }
  for (std::size_t t = 1; t < T; ++t) {
    for (std::size_t j = 0; j < n; ++j) {
      // Strict improvement keeps the lowest predecessor index on ties.
      double best = delta[t - 1][0] + log_trans[0][j];
      std::size_t arg = 0;
      for (std::size_t i = 1; i < n; ++i) {
        const double cand = delta[t - 1][i] + log_trans[i][j];
        if (cand > best) {
          best = cand;
          arg = i;
        }
      }
      delta[t][j] = best + log_density(model.emissions[j], obs[t]);
      psi[t][j] = arg;
    }
  }

  double best = delta[T - 1][0];
  std::size_t arg = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (delta[T - 1][i] > best) {
      best = delta[T - 1][i];
      arg = i;
    }
  }
  if (best == kNegInf) {
    throw underflow_error(
        "every state path has zero probability for these observations");
  }

  ViterbiResult result;
  result.log_prob = best;
  result.indices.assign(T, 0);
  result.indices[T - 1] = arg;
  for (std::size_t t = T - 1; t-- > 0;) {
    result.indices[t] = psi[t + 1][result.indices[t + 1]];
  }
  result.path.reserve(T);
  for (const std::size_t idx : result.indices) {
    result.path.push_back(model.states[idx]);
  }
  return result;
}

TrainResult baum_welch(const HmmModel& init, const std::vector<double>& obs,
                       int max_iter, double tol) {
  init.validate();
  check_observations(obs);
  if (max_iter < 1) {
    throw validation_error("max_iter must be at least 1");
  }
  if (!(tol > 0.0)) {
    throw validation_error("tol must be positive");
  }

  const std::size_t n = init.state_count();
  const std::size_t T = obs.size();

  TrainResult result;
  result.model = init;

  for (int iter = 0; iter < max_iter; ++iter) {
    const HmmModel& m = result.model;
    const auto alpha = log_forward(m, obs);
    const auto beta = log_backward(m, obs);
    const double loglik = log_sum_exp(alpha[T - 1]);
    result.loglik_trace.push_back(loglik);
    if (iter > 0 &&
        std::abs(loglik - result.loglik_trace[iter - 1]) <= tol) {
      result.converged = true;
      return result;
    }

    // E-step: state and transition responsibilities.
    std::vector<std::vector<double>> gamma(T, std::vector<double>(n));
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t i = 0; i < n; ++i) {
        gamma[t][i] = std::exp(alpha[t][i] + beta[t][i] - loglik);
      }
    }
    std::vector<std::vector<double>> xi_sum(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> log_trans(n);
    for (std::size_t i = 0; i < n; ++i) {
      log_trans[i] = log_vector(m.transition[i]);
    }
    for (std::size_t t = 0; t + 1 < T; ++t) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          xi_sum[i][j] += std::exp(
              alpha[t][i] + log_trans[i][j] +
              log_density(m.emissions[j], obs[t + 1]) + beta[t + 1][j] -
              loglik);
        }
      }
    }

    // M-step.
    HmmModel updated = result.model;
    updated.initial = gamma[0];
    for (std::size_t i = 0; i < n; ++i) {
      double occupancy = 0.0; // time spent in i, excluding the last step
      for (std::size_t t = 0; t + 1 < T; ++t) {
        occupancy += gamma[t][i];
      }
      if (occupancy > 1e-300) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          updated.transition[i][j] = xi_sum[i][j] / occupancy;
          row_sum += updated.transition[i][j];
        }
        // Renormalize away accumulated roundoff so rows stay stochastic.
        for (std::size_t j = 0; j < n; ++j) {
          updated.transition[i][j] /= row_sum;
        }
      }

      double weight = 0.0;
      double mean = 0.0;
      for (std::size_t t = 0; t < T; ++t) {
        weight += gamma[t][i];
        mean += gamma[t][i] * obs[t];
      }
      if (weight > 1e-300) {
        mean /= weight;
        double var = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
          var += gamma[t][i] * (obs[t] - mean) * (obs[t] - mean);
        }
        var /= weight;
        const double std_dev = std::sqrt(var);
        if (std_dev < kStdFloor) {
          throw state_collapse_error("emission std for state " + m.states[i] +
                                     " collapsed below the 1e-4 floor");
        }
        updated.emissions[i] = {mean, std_dev};
      }
      // A state with vanishing occupancy keeps its previous parameters:
      // the data carry no information about it.
    }
    double init_sum = 0.0;
    for (const double p : updated.initial) {
      init_sum += p;
    }
    for (double& p : updated.initial) {
      p /= init_sum;
    }

    result.model = std::move(updated);
    result.iterations = iter + 1;
  }

  // Iteration cap: record the final model's likelihood so the trace
  // covers the parameters actually returned.
  const auto alpha = log_forward(result.model, obs);
  result.loglik_trace.push_back(log_sum_exp(alpha[T - 1]));
  result.converged = false;
  return result;
}

std::vector<std::vector<double>> phase_distribution(
    const std::vector<std::vector<double>>& posterior) {
  std::vector<std::vector<double>> shares(posterior.size());
  for (std::size_t t = 0; t < posterior.size(); ++t) {
    double sum = 0.0;
    for (const double p : posterior[t]) {
      sum += p;
    }
    if (!(sum > 0.0)) {
      throw validation_error("posterior row has no probability mass");
    }
    shares[t].reserve(posterior[t].size());
    for (const double p : posterior[t]) {
      shares[t].push_back(100.0 * p / sum);
    }
  }
  return shares;
}

nlohmann::json to_json(const HmmModel& model) {
  nlohmann::json doc;
  doc["states"] = model.states;
  doc["initial"] = model.initial;
  doc["transition"] = model.transition;
  doc["emissions"] = nlohmann::json::array();
  for (const auto& e : model.emissions) {
    doc["emissions"].push_back({{"mean", e.mean}, {"std", e.std}});
  }
  return doc;
}

HmmModel model_from_json(const nlohmann::json& doc) {
  HmmModel model;
  try {
    model.states = doc.at("states").get<std::vector<std::string>>();
    model.initial = doc.at("initial").get<std::vector<double>>();
    model.transition =
        doc.at("transition").get<std::vector<std::vector<double>>>();
    for (const auto& e : doc.at("emissions")) {
      model.emissions.push_back(
          {e.at("mean").get<double>(), e.at("std").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("phase model JSON is malformed: ") +
                      e.what());
  }
  model.validate();
  return model;
}

} // namespace zetacast::hmm
