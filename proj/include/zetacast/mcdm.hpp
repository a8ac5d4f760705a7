#pragma once

// Multi-criteria model comparison: AHP criterion weights from a pairwise
// comparison matrix, and three scoring rules for the model-by-criterion
// decision matrix.
//
// Three rules ship side by side deliberately.  The published comparison
// table's totals are plain row sums; the closeness formula
//
//     C_i = sum_j w_j (d^-_j - d_ij) / (d^-_j - d^+_j)
//
// is a nonstandard TOPSIS variant; and textbook vector-normalized TOPSIS is
// included as the reference point.  Reports carry an explicit method tag so
// nobody mistakes one for another.

#include <string>
#include <vector>

namespace zetacast::mcdm {

// Positive reciprocal comparison matrix (Saaty convention), 2 <= n <= 9.
struct PairwiseMatrix {
  std::vector<std::vector<double>> values;
  std::size_t size() const { return values.size(); }
  void validate() const; // reciprocity within 1e-9, unit diagonal, n in [2,9]
};

struct AhpResult {
  std::vector<double> weights; // principal eigenvector, sums to 1
  double lambda_max = 0.0;
  double consistency_ratio = 0.0; // (lambda_max - n)/(n - 1) / RI_n
};

// Power iteration on the comparison matrix; throws validation_error for a
// malformed matrix and convergence_error if the iteration stalls.
AhpResult ahp_weights(const PairwiseMatrix& matrix);

struct DecisionMatrix {
  std::vector<std::string> models;   // row labels
  std::vector<std::string> criteria; // column labels
  std::vector<std::vector<double>> values; // nonnegative, models x criteria
  std::vector<double> weights;             // per criterion, nonnegative
  void validate() const;
};

enum class ScoreMethod { RowSum, Closeness, StandardTopsis };
const char* method_name(ScoreMethod method);

struct RankingReport {
  std::vector<std::string> models;
  std::vector<double> scores;
  std::vector<int> ranks; // 1-based permutation, descending by score
  ScoreMethod method = ScoreMethod::RowSum;
};

// score_i = sum_j value_ij.  Weights are ignored: the published table's
// criterion values arrive already weighted.
RankingReport score_row_sum(const DecisionMatrix& matrix);

// The closeness formula as printed, with caller-supplied ideal (d_plus) and
// anti-ideal (d_minus) per criterion.  Every criterion needs
// d_minus_j != d_plus_j.
RankingReport score_closeness(const DecisionMatrix& matrix,
                              const std::vector<double>& d_plus,
                              const std::vector<double>& d_minus);

// Textbook TOPSIS: vector-normalized columns, weighted, Euclidean distances
// to the ideal/anti-ideal rows, closeness D^-/(D^+ + D^-).  All criteria are
// treated as benefit criteria (higher is better).  A degenerate distance
// pair (single model, identical rows) scores 1 by convention.
RankingReport score_standard_topsis(const DecisionMatrix& matrix);

// CSV ingestion: header `model,<criterion...>`; an optional row labelled
// `weights` supplies the weight vector (defaults to equal weights).
DecisionMatrix decision_from_csv(const std::string& path);

// Headerless square CSV of comparison values.
PairwiseMatrix pairwise_from_csv(const std::string& path);

} // namespace zetacast::mcdm
