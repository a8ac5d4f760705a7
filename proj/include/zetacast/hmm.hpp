#pragma once

// Four-phase hidden Markov model over inflation observations.
//
// The economy is modelled as switching between latent phases
// (Stable, Growth, Volatile, Crash) with Gaussian emission of the
// observed inflation percent in each phase:
//
//   P(s_t = i | O_{1:t})  — forward filtering (scaled recursion)
//   argmax_path P(path, O) — Viterbi decoding
//   EM re-estimation       — Baum-Welch
//
// All recursions run in log space so sequences hundreds of periods
// long cannot underflow.  The model itself is immutable after
// construction; filtering and decoding are pure functions and safe to
// call concurrently.  Training is single-threaded per run.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace zetacast::hmm {

struct GaussianEmission {
  double mean = 0.0; // percent
  double std = 1.0;  // percent, > 0
};

struct HmmModel {
  std::vector<std::string> states;                // ordered labels
  std::vector<double> initial;                    // length N, sums to 1
  std::vector<std::vector<double>> transition;    // N x N, row-stochastic
  std::vector<GaussianEmission> emissions;        // length N

  std::size_t state_count() const { return states.size(); }

  // Throws validation_error when sizes disagree, probabilities leave
  // [0, 1], a row fails to sum to 1 within 1e-9, or an emission std
  // is not strictly positive.
  void validate() const;
};

// The canonical phase labels, in storage order.
std::vector<std::string> default_phase_labels();

// Reference four-phase model: calibrated phase-transition matrix with
// Gaussian inflation emissions per phase and the stationary
// distribution of the transition matrix as initial vector.
HmmModel default_phase_model();

// Left fixed point v = v P of a row-stochastic matrix, by power
// iteration from the uniform vector.  Throws validation_error for a
// non-stochastic matrix and convergence_error when the iteration does
// not settle (periodic chains).
std::vector<double> stationary_distribution(
    const std::vector<std::vector<double>>& transition);

struct ForwardResult {
  // posterior[t][i] = P(s_t = i | O_{1:t}); each row sums to 1.
  std::vector<std::vector<double>> posterior;
  double log_likelihood = 0.0; // log P(O_{1:T})
};

// Scaled forward recursion.  Throws validation_error for empty or
// non-finite observations and underflow_error when every state's
// density vanishes at some step (the observation sequence has zero
// probability under the model).
ForwardResult forward_filter(const HmmModel& model,
                             const std::vector<double>& obs);

struct ViterbiResult {
  std::vector<std::string> path;    // state labels, length T
  std::vector<std::size_t> indices; // same path as state indices
  double log_prob = 0.0;            // joint log P(path, O)
};

// Most likely phase sequence.  Ties are broken toward the lowest
// state index at every backtrack step.  Errors as forward_filter.
ViterbiResult viterbi(const HmmModel& model, const std::vector<double>& obs);

struct TrainResult {
  HmmModel model;
  std::vector<double> loglik_trace; // one entry per E-step, nondecreasing
  bool converged = false;           // false: iteration cap reached
  int iterations = 0;               // parameter updates applied
};

// Baum-Welch EM re-estimation of initial, transition, and emission
// parameters.  Stops when the log-likelihood improves by at most tol
// between iterations, or after max_iter updates (reported via
// `converged`, not an error).  Throws state_collapse_error when an
// emission std falls below the 1e-4 floor.
TrainResult baum_welch(const HmmModel& init, const std::vector<double>& obs,
                       int max_iter = 100, double tol = 1e-6);

// Stacked phase shares in percent: posterior rows scaled to sum to
// 100, ordered as the model's states.
std::vector<std::vector<double>> phase_distribution(
    const std::vector<std::vector<double>>& posterior);

// JSON serialization: {states, initial, transition, emissions}.
nlohmann::json to_json(const HmmModel& model);
HmmModel model_from_json(const nlohmann::json& doc);

} // namespace zetacast::hmm
