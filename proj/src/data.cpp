#include "zetacast/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zetacast/csv.hpp"
#include "zetacast/errors.hpp"

namespace zetacast::data {

namespace {

constexpr const char* kMandatory[] = {"period", "gdp_real", "m3", "policy_rate"};
constexpr const char* kOptional[] = {"exchange_rate", "reer", "unemployment",
                                     "wage", "inflation_actual"};

std::optional<double>* optional_slot(MacroRecord& rec, const std::string& field) {
  if (field == "exchange_rate") return &rec.exchange_rate;
  if (field == "reer") return &rec.reer;
  if (field == "unemployment") return &rec.unemployment;
  if (field == "wage") return &rec.wage;
  if (field == "inflation_actual") return &rec.inflation_actual;
  return nullptr;
}

const std::optional<double>* optional_slot(const MacroRecord& rec,
                                           const std::string& field) {
  return optional_slot(const_cast<MacroRecord&>(rec), field);
}

} // namespace

CsvSchema CsvSchema::identity() {
  CsvSchema schema;
  for (const char* f : kMandatory) {
    schema.columns[f] = f;
  }
  for (const char* f : kOptional) {
    schema.columns[f] = f;
  }
  return schema;
}

MacroSeries ingest(std::istream& in, const CsvSchema& schema, double beta) {
  const csv::Table table = csv::parse(in);

  // Resolve the column index of every mapped field up front.  Mandatory
  // fields must resolve; optional ones may be unmapped or absent.
  std::map<std::string, std::size_t> index;
  for (const auto& [field, column] : schema.columns) {
    const std::size_t at = csv::find_column(table, column);
    if (at != std::string::npos) {
      index[field] = at;
    }
  }
  for (const char* f : kMandatory) {
    if (!index.count(f)) {
      const auto mapped = schema.columns.find(f);
      throw parse_error(std::string("ingest: mandatory column '") +
                        (mapped == schema.columns.end() ? f : mapped->second.c_str()) +
                        "' missing from header");
    }
  }

  MacroSeries series;
  series.beta = beta;
  series.records.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    MacroRecord rec;
    rec.period = row[index.at("period")];
    if (rec.period.empty()) {
      throw validation_error("ingest: row " + std::to_string(r + 1) +
                             ": period is empty");
    }
    rec.gdp_real = csv::to_number(row[index.at("gdp_real")], "gdp_real", r + 1);
    rec.m3 = csv::to_number(row[index.at("m3")], "m3", r + 1);
    rec.policy_rate =
        csv::to_number(row[index.at("policy_rate")], "policy_rate", r + 1);
    for (const char* f : kOptional) {
      const auto at = index.find(f);
      if (at == index.end() || row[at->second].empty()) {
        continue;
      }
      *optional_slot(rec, f) = csv::to_number(row[at->second], f, r + 1);
    }
    series.records.push_back(std::move(rec));
  }

  validate(series);
  return series;
}

MacroSeries ingest_csv(const std::string& path, const CsvSchema& schema,
                       double beta) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("ingest: cannot open '" + path + "'");
  }
  return ingest(in, schema, beta);
}

void validate(const MacroSeries& series) {
  if (series.records.empty()) {
    throw validation_error("series: no records");
  }
  if (!std::isfinite(series.beta)) {
    throw validation_error("series: beta must be finite");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < series.records.size(); ++i) {
    const auto& rec = series.records[i];
    const std::string where =
        "row " + std::to_string(i + 1) + " (period " + rec.period + ")";
    if (!(rec.gdp_real > 0.0)) {
      throw validation_error("series: " + where + ": gdp_real must be > 0");
    }
    if (!(rec.m3 > 0.0)) {
      throw validation_error("series: " + where + ": m3 must be > 0");
    }
    if (!std::isfinite(rec.policy_rate)) {
      throw validation_error("series: " + where + ": policy_rate must be finite");
    }
    if (!seen.insert(rec.period).second) {
      throw validation_error("series: " + where + ": duplicate period");
    }
  }
}

void validate_shocks(const MacroSeries& series,
                     const std::vector<ShockAnnotation>& shocks) {
  std::set<std::string> periods;
  for (const auto& rec : series.records) {
    periods.insert(rec.period);
  }
  for (const auto& shock : shocks) {
    if (!periods.count(shock.period)) {
      throw validation_error("shocks: annotation '" + shock.label +
                             "' references unknown period '" + shock.period + "'");
    }
  }
}

std::vector<double> t_transform(const MacroSeries& series) {
  validate(series);
  std::vector<double> out;
  out.reserve(series.records.size());
  for (const auto& rec : series.records) {
    out.push_back(std::log(rec.gdp_real) + std::log(rec.m3) +
                  series.beta * rec.policy_rate);
  }
  return out;
}

std::vector<double> index_map(const std::vector<double>& t_raw, IndexMode mode) {
  if (t_raw.empty()) {
    throw validation_error("index_map: empty input");
  }
  if (mode == IndexMode::Raw) {
    return t_raw;
  }
  // Rank by ascending value; equal values keep input order, so the output
  // is always a permutation of 1..n.
  const std::size_t n = t_raw.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t_raw[a] < t_raw[b];
  });
  std::vector<double> ranks(n, 0.0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    ranks[order[pos]] = static_cast<double>(pos + 1);
  }
  return ranks;
}

std::string serialize_csv(const MacroSeries& series) {
  std::ostringstream out;
  out << "period,gdp_real,m3,policy_rate,exchange_rate,reer,unemployment,"
         "wage,inflation_actual\n";
  for (const auto& rec : series.records) {
    out << rec.period << ',' << csv::format_number(rec.gdp_real) << ','
        << csv::format_number(rec.m3) << ',' << csv::format_number(rec.policy_rate);
    for (const char* f : kOptional) {
      const auto* slot = optional_slot(rec, f);
      out << ',';
      if (slot->has_value()) {
        out << csv::format_number(**slot);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const MacroSeries& series) {
  nlohmann::json j;
  j["beta"] = series.beta;
  j["records"] = nlohmann::json::array();
  for (const auto& rec : series.records) {
    nlohmann::json r;
    r["period"] = rec.period;
    r["gdp_real"] = rec.gdp_real;
    r["m3"] = rec.m3;
    r["policy_rate"] = rec.policy_rate;
    for (const char* f : kOptional) {
      const auto* slot = optional_slot(rec, f);
      if (slot->has_value()) {
        r[f] = **slot;
      }
    }
    j["records"].push_back(std::move(r));
  }
  return j.dump(2);
}

MacroSeries from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("series json: ") + e.what());
  }
  MacroSeries series;
  try {
    series.beta = j.at("beta").get<double>();
    for (const auto& r : j.at("records")) {
      MacroRecord rec;
      rec.period = r.at("period").get<std::string>();
      rec.gdp_real = r.at("gdp_real").get<double>();
      rec.m3 = r.at("m3").get<double>();
      rec.policy_rate = r.at("policy_rate").get<double>();
      for (const char* f : kOptional) {
        if (r.contains(f)) {
          *optional_slot(rec, f) = r.at(f).get<double>();
        }
      }
      series.records.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("series json: ") + e.what());
  }
  validate(series);
  return series;
}

} // namespace zetacast::data
