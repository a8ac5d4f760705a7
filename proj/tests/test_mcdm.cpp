#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "zetacast/errors.hpp"
#include "zetacast/mcdm.hpp"

using namespace zetacast;
using mcdm::DecisionMatrix;
using mcdm::PairwiseMatrix;
using mcdm::ScoreMethod;

namespace {

DecisionMatrix hand_matrix() {
  DecisionMatrix m;
  m.models = {"A", "B"};
  m.criteria = {"c1", "c2"};
  m.values = {{2.0, 7.0}, {5.0, 3.0}};
  m.weights = {0.6, 0.4};
  return m;
}

DecisionMatrix score_table() {
  DecisionMatrix m;
  m.models = {"fpas", "fpas_zeta", "arima"};
  m.criteria = {"c1", "c2", "c3", "c4", "c5"};
  m.values = {{0.06, 0.1, 0.04, 0.02, 0.045},
              {0.18, 0.212, 0.16, 0.18, 0.142},
              {0.08, 0.087, 0.06, 0.02, 0.06}};
  m.weights = {0.2, 0.2, 0.2, 0.2, 0.2};
  return m;
}

} // namespace

TEST_CASE("ahp: symmetric comparisons give uniform weights") {
  PairwiseMatrix m;
  m.values = {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  const auto res = mcdm::ahp_weights(m);
  REQUIRE(res.weights.size() == 3);
  for (const double w : res.weights) {
    CHECK(w == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  CHECK(res.consistency_ratio == 0.0);
  CHECK(res.lambda_max == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("ahp: consistent matrices reproduce their generating weights") {
  const std::vector<double> w{0.6, 0.3, 0.1};
  PairwiseMatrix m;
  m.values.assign(3, std::vector<double>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      m.values[i][j] = w[i] / w[j];
    }
  }
  const auto res = mcdm::ahp_weights(m);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(res.weights[i] == doctest::Approx(w[i]).epsilon(1e-6));
  }
  CHECK(res.consistency_ratio < 1e-9);

  double sum = 0.0;
  for (const double v : res.weights) {
    sum += v;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ahp: mildly inconsistent Saaty example") {
  // 3x3 scale matrix with known principal eigenvalue 3.00920271...,
  // eigenvector and CR hand-computed via the characteristic cubic.
  PairwiseMatrix m;
  m.values = {{1.0, 2.0, 3.0}, {0.5, 1.0, 2.0}, {1.0 / 3.0, 0.5, 1.0}};
  const auto res = mcdm::ahp_weights(m);
  CHECK(res.lambda_max == doctest::Approx(3.009202712714).epsilon(1e-9));
  CHECK(res.weights[0] == doctest::Approx(0.539614550221).epsilon(1e-8));
  CHECK(res.weights[1] == doctest::Approx(0.296961331212).epsilon(1e-8));
  CHECK(res.weights[2] == doctest::Approx(0.163424118566).epsilon(1e-8));
  CHECK(res.consistency_ratio == doctest::Approx(0.007933373030).epsilon(1e-3));
}

TEST_CASE("ahp: validation rejects malformed matrices") {
  PairwiseMatrix bad;
  bad.values = {{1.0}};
  CHECK_THROWS_AS(mcdm::ahp_weights(bad), validation_error); // n < 2

  bad.values = {{1.0, 2.0}, {0.4, 1.0}}; // 0.4 != 1/2
  CHECK_THROWS_AS(mcdm::ahp_weights(bad), validation_error);

  bad.values = {{2.0, 1.0}, {1.0, 1.0}}; // diagonal
  CHECK_THROWS_AS(mcdm::ahp_weights(bad), validation_error);

  bad.values = {{1.0, -2.0}, {-0.5, 1.0}}; // positivity
  CHECK_THROWS_AS(mcdm::ahp_weights(bad), validation_error);
}

TEST_CASE("row-sum scores reproduce the comparison table") {
  const auto report = mcdm::score_row_sum(score_table());
  REQUIRE(report.scores.size() == 3);
  CHECK(report.scores[0] == doctest::Approx(0.265).epsilon(1e-12));
  // Hand sum is 0.874; sources quoting 0.875 rounded.
  CHECK(report.scores[1] == doctest::Approx(0.874).epsilon(1e-12));
  CHECK(report.scores[2] == doctest::Approx(0.307).epsilon(1e-12));
  CHECK(report.ranks == std::vector<int>{3, 1, 2});
  CHECK(report.method == ScoreMethod::RowSum);

  // All-zero row sits last.
  auto with_zero = score_table();
  with_zero.models.push_back("null");
  with_zero.values.push_back({0, 0, 0, 0, 0});
  const auto r2 = mcdm::score_row_sum(with_zero);
  CHECK(r2.scores[3] == 0.0);
  CHECK(r2.ranks[3] == 4);
}

TEST_CASE("row-sum is linear in each column") {
  auto m = score_table();
  const auto base = mcdm::score_row_sum(m);
  auto scaled = m;
  for (auto& row : scaled.values) {
    row[2] *= 3.0;
  }
  const auto after = mcdm::score_row_sum(scaled);
  for (std::size_t i = 0; i < m.models.size(); ++i) {
    CHECK(after.scores[i] ==
          doctest::Approx(base.scores[i] + 2.0 * m.values[i][2]).epsilon(1e-12));
  }
}

TEST_CASE("closeness formula: ideal and anti-ideal rows") {
  auto m = hand_matrix();
  const std::vector<double> d_plus{5.0, 7.0};
  const std::vector<double> d_minus{2.0, 3.0};

  // A row equal to the ideal scores sum(w) = 1; the anti-ideal scores 0.
  m.values = {{5.0, 7.0}, {2.0, 3.0}};
  const auto report = mcdm::score_closeness(m, d_plus, d_minus);
  CHECK(report.scores[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.scores[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(report.method == ScoreMethod::Closeness);
}

TEST_CASE("closeness formula: two-model hand example") {
  const auto report = mcdm::score_closeness(hand_matrix(), {5.0, 7.0}, {2.0, 3.0});
  // C_A = 0.6*(2-2)/(2-5) + 0.4*(3-7)/(3-7) = 0.4
  // C_B = 0.6*(2-5)/(2-5) + 0.4*(3-3)/(3-7) = 0.6
  CHECK(report.scores[0] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(report.scores[1] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(report.ranks == std::vector<int>{2, 1});
}

TEST_CASE("closeness formula is invariant under affine criterion rescaling") {
  const auto base = mcdm::score_closeness(hand_matrix(), {5.0, 7.0}, {2.0, 3.0});
  // Rescale criterion 0 by x -> 10x + 4 everywhere it appears.
  auto m = hand_matrix();
  for (auto& row : m.values) {
    row[0] = 10.0 * row[0] + 4.0;
  }
  const auto scaled =
      mcdm::score_closeness(m, {10.0 * 5.0 + 4.0, 7.0}, {10.0 * 2.0 + 4.0, 3.0});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(scaled.scores[i] == doctest::Approx(base.scores[i]).epsilon(1e-12));
  }
}

TEST_CASE("closeness formula rejects degenerate criteria") {
  CHECK_THROWS_AS(mcdm::score_closeness(hand_matrix(), {5.0, 4.0}, {5.0, 3.0}),
                  std::domain_error);
  CHECK_THROWS_AS(mcdm::score_closeness(hand_matrix(), {5.0}, {2.0}),
                  validation_error);
}

TEST_CASE("standard topsis: two-model hand example") {
  // Normalized columns: c1 / sqrt(29), c2 / sqrt(58); weighted by (0.6, 0.4);
  // closeness worked out by hand from the Euclidean distances.
  const auto report = mcdm::score_standard_topsis(hand_matrix());
  CHECK(report.scores[0] == doctest::Approx(0.385952821335335).epsilon(1e-12));
  CHECK(report.scores[1] == doctest::Approx(0.614047178664665).epsilon(1e-12));
  CHECK(report.ranks == std::vector<int>{2, 1});
  CHECK(report.method == ScoreMethod::StandardTopsis);
}

TEST_CASE("standard topsis: degenerate cases") {
  DecisionMatrix solo;
  solo.models = {"only"};
  solo.criteria = {"c1", "c2"};
  solo.values = {{3.0, 4.0}};
  solo.weights = {0.5, 0.5};
  const auto report = mcdm::score_standard_topsis(solo);
  CHECK(report.scores[0] == 1.0);
  CHECK(report.ranks == std::vector<int>{1});

  DecisionMatrix zero_col = hand_matrix();
  zero_col.values = {{0.0, 7.0}, {0.0, 3.0}};
  CHECK_THROWS_AS(mcdm::score_standard_topsis(zero_col), std::domain_error);
}

TEST_CASE("dominant model ranks first under every method") {
  DecisionMatrix m;
  m.models = {"weak", "strong", "middle"};
  m.criteria = {"c1", "c2", "c3"};
  m.values = {{0.1, 0.2, 0.1}, {0.9, 0.8, 0.7}, {0.5, 0.4, 0.3}};
  m.weights = {0.5, 0.3, 0.2};

  CHECK(mcdm::score_row_sum(m).ranks == std::vector<int>{3, 1, 2});
  CHECK(mcdm::score_standard_topsis(m).ranks == std::vector<int>{3, 1, 2});
  const auto closeness =
      mcdm::score_closeness(m, {0.9, 0.8, 0.7}, {0.1, 0.2, 0.1});
  CHECK(closeness.ranks == std::vector<int>{3, 1, 2});
}

TEST_CASE("ranks are always a permutation") {
  const auto report = mcdm::score_row_sum(score_table());
  std::vector<int> sorted = report.ranks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    CHECK(sorted[i] == static_cast<int>(i + 1));
  }
}

TEST_CASE("decision matrix CSV ingestion") {
  const auto m = mcdm::decision_from_csv(ZETACAST_FIXTURE_DIR "/model_scores.csv");
  REQUIRE(m.models.size() == 3);
  CHECK(m.models[1] == "fpas_zeta");
  REQUIRE(m.criteria.size() == 5);
  CHECK(m.criteria[0] == "trend_capture");
  CHECK(m.values[1][1] == 0.212);
  CHECK(m.weights == std::vector<double>(5, 0.2));

  const auto report = mcdm::score_row_sum(m);
  CHECK(report.scores[1] == doctest::Approx(0.874).epsilon(1e-12));
  CHECK(report.ranks == std::vector<int>{3, 1, 2});
}

TEST_CASE("decision matrix validation") {
  auto m = hand_matrix();
  m.values[0][0] = -1.0;
  CHECK_THROWS_AS(m.validate(), validation_error);

  m = hand_matrix();
  m.weights = {0.5};
  CHECK_THROWS_AS(m.validate(), validation_error);

  m = hand_matrix();
  m.values.pop_back();
  CHECK_THROWS_AS(m.validate(), validation_error);
}
