#pragma once

// Macro time-series ingestion and the t-argument transformation
//
//     t = ln(GDP) + ln(M3) + beta * policy_rate
//
// that maps a macro state onto the zeta evaluation axis, plus the index
// mapping that reconciles raw t magnitudes with a unit-step sample grid.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zetacast::data {

struct MacroRecord {
  std::string period; // calendar identifier: "2015" or "2015Q3"
  double gdp_real = 0.0;
  double m3 = 0.0;
  double policy_rate = 0.0;
  std::optional<double> exchange_rate;
  std::optional<double> reer;
  std::optional<double> unemployment;
  std::optional<double> wage;
  std::optional<double> inflation_actual;
};

struct MacroSeries {
  std::vector<MacroRecord> records;
  double beta = 0.1; // policy-rate coefficient in the t transform
};

enum class ShockKind { Domestic, External };

struct ShockAnnotation {
  std::string period;
  ShockKind kind = ShockKind::Domestic;
  std::string label;
};

// Canonical field -> CSV column-name mapping.  Mandatory fields: period,
// gdp_real, m3, policy_rate.  Optional fields may be unmapped, mapped to a
// missing column, or left blank in individual rows.
struct CsvSchema {
  std::map<std::string, std::string> columns;
  static CsvSchema identity(); // every canonical field mapped to itself
};

// Read and validate a macro CSV file.  Throws parse_error for unreadable
// files, missing mandatory columns or malformed numbers; validation_error
// (with the offending row) for contract violations.
MacroSeries ingest_csv(const std::string& path,
                       const CsvSchema& schema = CsvSchema::identity(),
                       double beta = 0.1);
MacroSeries ingest(std::istream& in, const CsvSchema& schema = CsvSchema::identity(),
                   double beta = 0.1);

// Contract checks shared by ingestion and hand-built series: nonempty,
// positive GDP/M3 levels, unique periods, finite beta.
void validate(const MacroSeries& series);

// Every annotation must reference a period present in the series.
void validate_shocks(const MacroSeries& series,
                     const std::vector<ShockAnnotation>& shocks);

// t_i = ln(gdp_i) + ln(m3_i) + beta * rate_i, order-preserving.
std::vector<double> t_transform(const MacroSeries& series);

enum class IndexMode { Raw, Rank };

// Raw mode returns the input unchanged; rank mode replaces each value with
// its 1-based rank by ascending value (ties resolved in input order), so a
// monotone series lands exactly on 1..n.
std::vector<double> index_map(const std::vector<double>& t_raw, IndexMode mode);

// Canonical CSV round-trip (header uses canonical field names; optional
// fields serialize as blank cells).
std::string serialize_csv(const MacroSeries& series);

// JSON hand-off between pipeline stages.
std::string to_json(const MacroSeries& series);
MacroSeries from_json(const std::string& text);

} // namespace zetacast::data
