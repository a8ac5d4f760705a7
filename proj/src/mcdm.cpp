#include "zetacast/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "zetacast/csv.hpp"
#include "zetacast/errors.hpp"

namespace zetacast::mcdm {

namespace {

// Standard random-index constants for n = 1..9 (Saaty).
constexpr double kRandomIndex[] = {0.0, 0.0, 0.0, 0.58, 0.90,
                                   1.12, 1.24, 1.32, 1.41, 1.45};

std::vector<int> ranks_descending(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });
  std::vector<int> ranks(scores.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    ranks[order[pos]] = static_cast<int>(pos + 1);
  }
  return ranks;
}

RankingReport make_report(const DecisionMatrix& matrix,
                          std::vector<double> scores, ScoreMethod method) {
  RankingReport report;
  report.models = matrix.models;
  report.ranks = ranks_descending(scores);
  report.scores = std::move(scores);
  report.method = method;
  return report;
}

} // namespace

void PairwiseMatrix::validate() const {
  const std::size_t n = values.size();
  if (n < 2 || n > 9) {
    throw validation_error("pairwise: size must lie in [2, 9], got " +
                           std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].size() != n) {
      throw validation_error("pairwise: row " + std::to_string(i + 1) +
                             " is not length " + std::to_string(n));
    }
    if (values[i][i] != 1.0) {
      throw validation_error("pairwise: diagonal entry " + std::to_string(i + 1) +
                             " must be 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(values[i][j] > 0.0)) {
        throw validation_error("pairwise: entries must be positive");
      }
      if (std::abs(values[i][j] * values[j][i] - 1.0) > 1e-9) {
        throw validation_error("pairwise: reciprocity fails at (" +
                               std::to_string(i + 1) + ", " +
                               std::to_string(j + 1) + ")");
      }
    }
  }
}

AhpResult ahp_weights(const PairwiseMatrix& matrix) {
  matrix.validate();
  const std::size_t n = matrix.size();

  // Power iteration: a positive matrix has a simple dominant (Perron)
  // eigenvalue, so this converges from the uniform start.
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> av(n);
  double lambda = 0.0;
  bool converged = false;
  for (int iter = 0; iter < 10000 && !converged; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        acc += matrix.values[i][j] * v[j];
      }
      av[i] = acc;
    }
    const double norm = std::accumulate(av.begin(), av.end(), 0.0);
    // Rayleigh-style estimate: with v normalized to sum 1, sum(Av) -> lambda.
    lambda = norm;
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = av[i] / norm;
      if (std::abs(next - v[i]) > 1e-13) {
        converged = false;
      }
      v[i] = next;
    }
  }
  if (!converged) {
    throw convergence_error("ahp: power iteration did not settle");
  }

  AhpResult result;
  result.weights = v;
  result.lambda_max = lambda;
  const double ci =
      std::max(0.0, (lambda - static_cast<double>(n)) / static_cast<double>(n - 1));
  const double ri = kRandomIndex[n];
  result.consistency_ratio = ri > 0.0 ? ci / ri : 0.0;
  return result;
}

void DecisionMatrix::validate() const {
  if (models.empty() || criteria.empty()) {
    throw validation_error("decision: need at least one model and criterion");
  }
  if (values.size() != models.size()) {
    throw validation_error("decision: row count does not match model labels");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != criteria.size()) {
      throw validation_error("decision: row " + std::to_string(i + 1) +
                             " does not match the criterion count");
    }
    for (const double v : values[i]) {
      if (!(v >= 0.0)) {
        throw validation_error("decision: values must be nonnegative");
      }
    }
  }
  if (weights.size() != criteria.size()) {
    throw validation_error("decision: weight count does not match criteria");
  }
  for (const double w : weights) {
    if (!(w >= 0.0)) {
      throw validation_error("decision: weights must be nonnegative");
    }
  }
}

const char* method_name(ScoreMethod method) {
  switch (method) {
    case ScoreMethod::RowSum:
      return "row-sum";
    case ScoreMethod::Closeness:
      return "closeness-formula";
    case ScoreMethod::StandardTopsis:
      return "standard-topsis";
  }
  return "unknown";
}

RankingReport score_row_sum(const DecisionMatrix& matrix) {
  matrix.validate();
  std::vector<double> scores;
  scores.reserve(matrix.models.size());
  for (const auto& row : matrix.values) {
    scores.push_back(std::accumulate(row.begin(), row.end(), 0.0));
  }
  return make_report(matrix, std::move(scores), ScoreMethod::RowSum);
}

RankingReport score_closeness(const DecisionMatrix& matrix,
                              const std::vector<double>& d_plus,
                              const std::vector<double>& d_minus) {
  matrix.validate();
  const std::size_t m = matrix.criteria.size();
  if (d_plus.size() != m || d_minus.size() != m) {
    throw validation_error("closeness: ideal vectors must match the criteria");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (d_minus[j] == d_plus[j]) {
      throw std::domain_error("closeness: criterion " + std::to_string(j + 1) +
                              " has d- = d+ (degenerate)");
    }
  }
  std::vector<double> scores;
  scores.reserve(matrix.models.size());
  for (const auto& row : matrix.values) {
    double c = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      c += matrix.weights[j] * (d_minus[j] - row[j]) / (d_minus[j] - d_plus[j]);
    }
    scores.push_back(c);
  }
  return make_report(matrix, std::move(scores), ScoreMethod::Closeness);
}

RankingReport score_standard_topsis(const DecisionMatrix& matrix) {
  matrix.validate();
  const std::size_t rows = matrix.models.size();
  const std::size_t cols = matrix.criteria.size();

  // Vector normalization, then criterion weighting.
  std::vector<std::vector<double>> weighted(rows, std::vector<double>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    double ss = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      ss += matrix.values[i][j] * matrix.values[i][j];
    }
    if (ss == 0.0) {
      throw std::domain_error("topsis: criterion '" + matrix.criteria[j] +
                              "' is all zero");
    }
    const double norm = std::sqrt(ss);
    for (std::size_t i = 0; i < rows; ++i) {
      weighted[i][j] = matrix.weights[j] * matrix.values[i][j] / norm;
    }
  }

  // Benefit-criteria ideal and anti-ideal rows.
  std::vector<double> ideal(cols, 0.0);
  std::vector<double> anti(cols, 0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    double hi = weighted[0][j];
    double lo = weighted[0][j];
    for (std::size_t i = 1; i < rows; ++i) {
      hi = std::max(hi, weighted[i][j]);
      lo = std::min(lo, weighted[i][j]);
    }
    ideal[j] = hi;
    anti[j] = lo;
  }

  std::vector<double> scores;
  scores.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    double dp = 0.0;
    double dm = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      dp += (weighted[i][j] - ideal[j]) * (weighted[i][j] - ideal[j]);
      dm += (weighted[i][j] - anti[j]) * (weighted[i][j] - anti[j]);
    }
    dp = std::sqrt(dp);
    dm = std::sqrt(dm);
    // Both distances vanish when the alternative set is a single point;
    // call that a perfect closeness rather than 0/0.
    scores.push_back(dp + dm == 0.0 ? 1.0 : dm / (dp + dm));
  }
  return make_report(matrix, std::move(scores), ScoreMethod::StandardTopsis);
}

DecisionMatrix decision_from_csv(const std::string& path) {
  const csv::Table table = csv::read_file(path);
  if (table.header.size() < 2 || table.header[0] != "model") {
    throw parse_error("decision csv: header must be model,<criterion...>");
  }
  DecisionMatrix matrix;
  matrix.criteria.assign(table.header.begin() + 1, table.header.end());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    std::vector<double> values;
    values.reserve(matrix.criteria.size());
    for (std::size_t j = 1; j < table.header.size(); ++j) {
      values.push_back(csv::to_number(row[j], table.header[j], r + 1));
    }
    if (row[0] == "weights") {
      matrix.weights = std::move(values);
    } else {
      matrix.models.push_back(row[0]);
      matrix.values.push_back(std::move(values));
    }
  }
  if (matrix.weights.empty()) {
    matrix.weights.assign(matrix.criteria.size(),
                          1.0 / static_cast<double>(matrix.criteria.size()));
  }
  matrix.validate();
  return matrix;
}

PairwiseMatrix pairwise_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("pairwise csv: cannot open '" + path + "'");
  }
  PairwiseMatrix matrix;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos ||
        line[line.find_first_not_of(" \t\r\n")] == '#') {
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      row.push_back(csv::to_number(cell, "comparison", lineno));
    }
    matrix.values.push_back(std::move(row));
  }
  matrix.validate();
  return matrix;
}

} // namespace zetacast::mcdm
