#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "oracles/hmm_reference.hpp"
#include "zetacast/csv.hpp"
#include "zetacast/errors.hpp"
#include "zetacast/hmm.hpp"
#include "zetacast/stochastic.hpp"

using namespace zetacast;
using hmm::GaussianEmission;
using hmm::HmmModel;

namespace {

HmmModel toy_two_state() {
  HmmModel m;
  m.states = {"A", "B"};
  m.initial = {0.6, 0.4};
  m.transition = {{0.7, 0.3}, {0.4, 0.6}};
  m.emissions = {{1.0, 0.5}, {2.5, 0.8}};
  return m;
}

std::uint64_t splitmix_next(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& s) {
  return static_cast<double>(splitmix_next(s) >> 11) * 0x1.0p-53;
}

std::size_t pick(const std::vector<double>& probs, double u) {
  double cum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    cum += probs[i];
    if (u < cum) {
      return i;
    }
  }
  return probs.size() - 1;
}

// Draws an observation sequence from the model itself.
std::vector<double> simulate(const HmmModel& m, std::size_t n,
                             std::uint64_t seed) {
  std::uint64_t chain_state = seed;
  stochastic::NormalStream noise(seed ^ 0x5DEECE66DULL);
  std::vector<double> obs;
  obs.reserve(n);
  std::size_t state = pick(m.initial, uniform01(chain_state));
  for (std::size_t t = 0; t < n; ++t) {
    obs.push_back(m.emissions[state].mean + m.emissions[state].std * noise.next());
    state = pick(m.transition[state], uniform01(chain_state));
  }
  return obs;
}

std::vector<double> fixture_observations() {
  const auto table = csv::read_file(std::string(ZETACAST_FIXTURE_DIR) +
                                    "/phase_obs_sample.csv");
  std::vector<double> obs;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    obs.push_back(csv::to_number(table.rows[r][1], "inflation", r + 1));
  }
  return obs;
}

} // namespace

TEST_CASE("fully symmetric model yields uniform posteriors") {
  HmmModel m;
  m.states = {"P", "Q", "R", "S"};
  m.initial = {0.25, 0.25, 0.25, 0.25};
  m.transition.assign(4, {0.25, 0.25, 0.25, 0.25});
  m.emissions.assign(4, {2.0, 1.0});

  const std::vector<double> obs{1.0, 5.0, -3.0};
  const auto fwd = hmm::forward_filter(m, obs);
  REQUIRE(fwd.posterior.size() == 3);
  for (const auto& row : fwd.posterior) {
    for (const double p : row) {
      CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
    }
  }
  CHECK(std::isfinite(fwd.log_likelihood));

  // Every path ties, so the tie-break must pick state 0 throughout.
  const auto vit = hmm::viterbi(m, obs);
  for (const std::size_t idx : vit.indices) {
    CHECK(idx == 0);
  }
}

TEST_CASE("two-state toy matches exhaustive enumeration") {
  const auto m = toy_two_state();
  const std::vector<double> obs{1.2, 2.0, 2.8};
  const auto fwd = hmm::forward_filter(m, obs);

  CHECK(fwd.log_likelihood ==
        doctest::Approx(-3.7353011837881107).epsilon(1e-12));
  // Filtered rows, frozen from prefix-path enumeration.
  CHECK(fwd.posterior[0][0] ==
        doctest::Approx(0.89242759584192877).epsilon(1e-12));
  CHECK(fwd.posterior[1][0] ==
        doctest::Approx(0.34598030369533167).epsilon(1e-12));
  CHECK(fwd.posterior[2][0] ==
        doctest::Approx(0.0026659980911725232).epsilon(1e-10));

  // Cross-check every row against the live enumeration oracle.
  CHECK(fwd.log_likelihood ==
        doctest::Approx(static_cast<double>(oracle::brute_log_likelihood(m, obs)))
            .epsilon(1e-10));
  for (std::size_t t = 0; t < obs.size(); ++t) {
    const auto expected = oracle::brute_filtered(m, obs, t);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(fwd.posterior[t][i] ==
            doctest::Approx(static_cast<double>(expected[i])).epsilon(1e-10));
    }
  }
}

TEST_CASE("four-phase model: posterior rows are distributions") {
  const auto m = hmm::default_phase_model();
  const std::vector<double> obs{2.8, 3.1, 4.6, 8.4, 13.5, 5.3};
  const auto fwd = hmm::forward_filter(m, obs);
  for (const auto& row : fwd.posterior) {
    double sum = 0.0;
    for (const double p : row) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(fwd.log_likelihood ==
        doctest::Approx(static_cast<double>(oracle::brute_log_likelihood(m, obs)))
            .epsilon(1e-8));
}

TEST_CASE("viterbi follows a deterministic chain regardless of data") {
  HmmModel m;
  m.states = {"A", "B"};
  m.initial = {0.0, 1.0};
  m.transition = {{0.0, 1.0}, {1.0, 0.0}}; // strict alternation
  m.emissions = {{0.0, 1.0}, {0.0, 1.0}};

  const auto vit = hmm::viterbi(m, {7.0, -2.0, 7.0, 7.0});
  CHECK(vit.path == std::vector<std::string>{"B", "A", "B", "A"});
}

TEST_CASE("viterbi maximizes over all 4^8 enumerated paths") {
  const auto m = hmm::default_phase_model();
  const std::vector<double> obs{2.8, 3.1, 4.6, 8.4, 13.5, 12.2, 6.1, 3.2};
  const auto vit = hmm::viterbi(m, obs);

  const double best =
      static_cast<double>(oracle::brute_best_log_prob(m, obs));
  CHECK(vit.log_prob == doctest::Approx(best).epsilon(1e-10));

  // The reported path must itself achieve the reported log-probability.
  const double own = static_cast<double>(
      logl(oracle::path_weight(m, vit.indices, obs)));
  CHECK(own == doctest::Approx(vit.log_prob).epsilon(1e-10));

  // Labels mirror indices.
  for (std::size_t t = 0; t < obs.size(); ++t) {
    CHECK(vit.path[t] == m.states[vit.indices[t]]);
  }
}

TEST_CASE("viterbi on one observation is the pointwise argmax") {
  const auto m = hmm::default_phase_model();

  const auto crash = hmm::viterbi(m, {13.0});
  CHECK(crash.path == std::vector<std::string>{"Crash"});
  const auto stable = hmm::viterbi(m, {3.0});
  CHECK(stable.path == std::vector<std::string>{"Stable"});

  // log_prob equals log initial + log Gaussian density, computed directly.
  const double z = (13.0 - m.emissions[3].mean) / m.emissions[3].std;
  const double expected = std::log(m.initial[3]) - 0.5 * z * z -
                          std::log(m.emissions[3].std) -
                          0.5 * std::log(2.0 * 3.14159265358979323846);
  CHECK(crash.log_prob == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("viterbi beats 1000 sampled paths") {
  const auto m = hmm::default_phase_model();
  const auto obs = fixture_observations();
  REQUIRE(obs.size() == 24);
  const auto vit = hmm::viterbi(m, obs);

  std::uint64_t s = 20240815;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::size_t> path(obs.size());
    for (auto& idx : path) {
      idx = static_cast<std::size_t>(splitmix_next(s) % 4);
    }
    const long double w = oracle::path_weight(m, path, obs);
    if (w > 0.0L) {
      CHECK(static_cast<double>(logl(w)) <= vit.log_prob + 1e-9);
    }
  }
}

TEST_CASE("one EM iteration reproduces hand-worked E/M arithmetic") {
  const auto m = toy_two_state();
  const std::vector<double> obs{1.2, 2.0, 2.8};
  const auto trained = hmm::baum_welch(m, obs, 1, 1e-15);

  CHECK(trained.iterations == 1);
  CHECK_FALSE(trained.converged);
  REQUIRE(trained.loglik_trace.size() == 2);
  CHECK(trained.loglik_trace[0] ==
        doctest::Approx(-3.7353011837881107).epsilon(1e-12));
  CHECK(trained.loglik_trace[1] >= trained.loglik_trace[0] - 1e-8);

  // Frozen from full-path enumeration of responsibilities + M-step.
  CHECK(trained.model.initial[0] ==
        doctest::Approx(0.83299767384614154).epsilon(1e-10));
  CHECK(trained.model.initial[1] ==
        doctest::Approx(0.16700232615385849).epsilon(1e-10));
  CHECK(trained.model.transition[0][0] ==
        doctest::Approx(0.18952485344300934).epsilon(1e-10));
  CHECK(trained.model.transition[0][1] ==
        doctest::Approx(0.81047514655699071).epsilon(1e-10));
  CHECK(trained.model.transition[1][0] ==
        doctest::Approx(0.01557876058196489).epsilon(1e-10));
  CHECK(trained.model.transition[1][1] ==
        doctest::Approx(0.98442123941803528).epsilon(1e-10));
  CHECK(trained.model.emissions[0].mean ==
        doctest::Approx(1.3646817080693321).epsilon(1e-10));
  CHECK(trained.model.emissions[0].std ==
        doctest::Approx(0.32846471905868618).epsilon(1e-10));
  CHECK(trained.model.emissions[1].mean ==
        doctest::Approx(2.3398755563461804).epsilon(1e-10));
  CHECK(trained.model.emissions[1].std ==
        doctest::Approx(0.51551743773760916).epsilon(1e-10));
}

TEST_CASE("baum-welch recovers a two-state generator") {
  HmmModel truth;
  truth.states = {"Low", "High"};
  truth.initial = {0.5, 0.5};
  truth.transition = {{0.9, 0.1}, {0.2, 0.8}};
  truth.emissions = {{0.0, 1.0}, {6.0, 1.0}};
  const auto obs = simulate(truth, 2000, 99);

  HmmModel start = truth;
  start.transition = {{0.7, 0.3}, {0.3, 0.7}};
  start.emissions = {{1.0, 2.0}, {5.0, 2.0}};
  const auto trained = hmm::baum_welch(start, obs, 200, 1e-7);

  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(std::abs(trained.model.transition[i][j] -
                     truth.transition[i][j]) < 0.1);
    }
  }
  CHECK(std::abs(trained.model.emissions[0].mean - 0.0) < 0.3);
  CHECK(std::abs(trained.model.emissions[1].mean - 6.0) < 0.3);
  CHECK(trained.model.emissions[0].std > 0.7);
  CHECK(trained.model.emissions[0].std < 1.3);
  CHECK(trained.model.emissions[1].std > 0.7);
  CHECK(trained.model.emissions[1].std < 1.3);

  for (std::size_t k = 1; k < trained.loglik_trace.size(); ++k) {
    CHECK(trained.loglik_trace[k] >= trained.loglik_trace[k - 1] - 1e-8);
  }
}

TEST_CASE("a generator-true start is close to an EM fixed point") {
  HmmModel truth;
  truth.states = {"Low", "High"};
  truth.initial = {0.5, 0.5};
  truth.transition = {{0.9, 0.1}, {0.2, 0.8}};
  truth.emissions = {{0.0, 1.0}, {6.0, 1.0}};
  const auto obs = simulate(truth, 3000, 7);

  const auto trained = hmm::baum_welch(truth, obs, 50, 1e-12);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(std::abs(trained.model.transition[i][j] -
                     truth.transition[i][j]) < 0.05);
    }
    CHECK(std::abs(trained.model.emissions[i].mean -
                   truth.emissions[i].mean) < 0.05);
    CHECK(std::abs(trained.model.emissions[i].std -
                   truth.emissions[i].std) < 0.05);
  }
}

TEST_CASE("every training stop point leaves a valid stochastic model") {
  const auto m = hmm::default_phase_model();
  const auto obs = fixture_observations();
  for (const int cap : {1, 2, 3, 5}) {
    const auto trained = hmm::baum_welch(m, obs, cap, 1e-12);
    CHECK_NOTHROW(trained.model.validate());
    for (std::size_t k = 1; k < trained.loglik_trace.size(); ++k) {
      CHECK(trained.loglik_trace[k] >= trained.loglik_trace[k - 1] - 1e-8);
    }
  }
}

TEST_CASE("constant observations collapse an emission state") {
  HmmModel m;
  m.states = {"A", "B"};
  m.initial = {0.5, 0.5};
  m.transition = {{0.5, 0.5}, {0.5, 0.5}};
  m.emissions = {{4.0, 1.0}, {4.4, 1.0}};
  const std::vector<double> obs(30, 4.2);
  CHECK_THROWS_AS(hmm::baum_welch(m, obs, 100, 1e-12),
                  zetacast::state_collapse_error);
}

TEST_CASE("vanishing observation probability is reported distinctly") {
  const auto m = hmm::default_phase_model();
  CHECK_THROWS_AS(hmm::forward_filter(m, {3.0, 1e200}),
                  zetacast::underflow_error);
  CHECK_THROWS_AS(hmm::viterbi(m, {3.0, 1e200}), zetacast::underflow_error);
  CHECK_THROWS_AS(hmm::forward_filter(m, {1e200}), zetacast::underflow_error);
}

TEST_CASE("model and input validation") {
  const auto m = hmm::default_phase_model();
  CHECK_THROWS_AS(hmm::forward_filter(m, {}), validation_error);
  CHECK_THROWS_AS(hmm::viterbi(m, {std::nan("")}), validation_error);
  CHECK_THROWS_AS(hmm::baum_welch(m, {3.0, 4.0}, 0, 1e-6), validation_error);
  CHECK_THROWS_AS(hmm::baum_welch(m, {3.0, 4.0}, 10, 0.0), validation_error);

  auto bad_row = m;
  bad_row.transition[1][2] += 0.05;
  CHECK_THROWS_AS(bad_row.validate(), validation_error);

  auto bad_init = m;
  bad_init.initial[0] = -bad_init.initial[0];
  CHECK_THROWS_AS(bad_init.validate(), validation_error);

  auto bad_std = m;
  bad_std.emissions[2].std = 0.0;
  CHECK_THROWS_AS(bad_std.validate(), validation_error);

  auto bad_shape = m;
  bad_shape.emissions.pop_back();
  CHECK_THROWS_AS(bad_shape.validate(), validation_error);

  HmmModel empty;
  CHECK_THROWS_AS(empty.validate(), validation_error);
}

TEST_CASE("phase distribution stacks to one hundred percent") {
  const auto uniform = hmm::phase_distribution({{0.25, 0.25, 0.25, 0.25}});
  for (const double share : uniform[0]) {
    CHECK(share == doctest::Approx(25.0).epsilon(1e-12));
  }

  const auto one_hot = hmm::phase_distribution({{0.0, 0.0, 1.0, 0.0}});
  CHECK(one_hot[0][2] == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(one_hot[0][0] == 0.0);

  const auto m = hmm::default_phase_model();
  const auto fwd = hmm::forward_filter(m, fixture_observations());
  const auto shares = hmm::phase_distribution(fwd.posterior);
  REQUIRE(shares.size() == fwd.posterior.size());
  for (const auto& row : shares) {
    double sum = 0.0;
    for (const double share : row) {
      sum += share;
    }
    CHECK(sum == doctest::Approx(100.0).epsilon(1e-6));
  }

  CHECK_THROWS_AS(hmm::phase_distribution({{0.0, 0.0}}), validation_error);
}

TEST_CASE("stationary distribution of the phase transition matrix") {
  const auto m = hmm::default_phase_model();
  const auto pi = hmm::stationary_distribution(m.transition);
  REQUIRE(pi.size() == 4);
  CHECK(pi[0] == doctest::Approx(0.405156537753223).epsilon(1e-12));
  CHECK(pi[1] == doctest::Approx(0.341620626151013).epsilon(1e-12));
  CHECK(pi[2] == doctest::Approx(0.162983425414365).epsilon(1e-12));
  CHECK(pi[3] == doctest::Approx(0.090239410681400).epsilon(1e-12));

  // Fixed-point residual: pi P = pi.
  for (std::size_t j = 0; j < 4; ++j) {
    double next = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      next += pi[i] * m.transition[i][j];
    }
    CHECK(next == doctest::Approx(pi[j]).epsilon(1e-12));
  }

  // The default model starts from its own stationary distribution.
  CHECK(m.initial == pi);

  const auto half = hmm::stationary_distribution({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(half[0] == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(hmm::stationary_distribution({{0.7, 0.2}, {0.5, 0.5}}),
                  validation_error);
}

TEST_CASE("model JSON round-trips exactly") {
  const auto m = hmm::default_phase_model();
  const auto doc = hmm::to_json(m);
  const auto back = hmm::model_from_json(doc);
  CHECK(back.states == m.states);
  CHECK(back.initial == m.initial);
  CHECK(back.transition == m.transition);
  REQUIRE(back.emissions.size() == m.emissions.size());
  for (std::size_t i = 0; i < m.emissions.size(); ++i) {
    CHECK(back.emissions[i].mean == m.emissions[i].mean);
    CHECK(back.emissions[i].std == m.emissions[i].std);
  }

  nlohmann::json broken = doc;
  broken.erase("transition");
  CHECK_THROWS_AS(hmm::model_from_json(broken), parse_error);
}

TEST_CASE("bundled phase model fixture loads and matches the default") {
  std::ifstream in(std::string(ZETACAST_FIXTURE_DIR) + "/phase_model.json");
  REQUIRE(in.good());
  nlohmann::json doc;
  in >> doc;
  const auto loaded = hmm::model_from_json(doc);
  const auto m = hmm::default_phase_model();

  CHECK(loaded.states == m.states);
  CHECK(loaded.transition == m.transition);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(loaded.initial[i] == doctest::Approx(m.initial[i]).epsilon(1e-12));
    CHECK(loaded.emissions[i].mean == m.emissions[i].mean);
    CHECK(loaded.emissions[i].std == m.emissions[i].std);
  }
}
