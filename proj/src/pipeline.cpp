#include "zetacast/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zetacast/csv.hpp"
#include "zetacast/errors.hpp"
#include "zetacast/forecast.hpp"
#include "zetacast/hmm.hpp"
#include "zetacast/spectral.hpp"
#include "zetacast/version.hpp"

namespace zetacast::pipeline {

namespace {

namespace fs = std::filesystem;

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw parse_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw parse_error("cannot write " + path);
  }
  out << text;
}

void write_json(const std::string& path, const nlohmann::json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_bytes(path));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path + " is not valid JSON: " + e.what());
  }
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

const char* mode_name(zeta::SignalMode mode) {
  return mode == zeta::SignalMode::RealPart ? "real" : "modulus";
}

zeta::SignalMode mode_from_name(const std::string& name) {
  if (name == "real") {
    return zeta::SignalMode::RealPart;
  }
  if (name == "modulus") {
    return zeta::SignalMode::Modulus;
  }
  throw validation_error("unknown signal mode: " + name);
}

const char* index_name(data::IndexMode mode) {
  return mode == data::IndexMode::Rank ? "rank" : "raw";
}

data::IndexMode index_from_name(const std::string& name) {
  if (name == "rank") {
    return data::IndexMode::Rank;
  }
  if (name == "raw") {
    return data::IndexMode::Raw;
  }
  throw validation_error("unknown index mode: " + name);
}

double reduce(const std::complex<double>& value, zeta::SignalMode mode) {
  return mode == zeta::SignalMode::RealPart ? value.real() : std::abs(value);
}

// Numeric column by name; throws with the column's role on failure.
std::vector<double> number_column(const csv::Table& table,
                                  const std::string& name,
                                  const std::string& role) {
  const std::size_t idx = csv::find_column(table, name);
  if (idx == static_cast<std::size_t>(-1)) {
    throw validation_error("input is missing the " + role + " column '" +
                           name + "'");
  }
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out.push_back(csv::to_number(table.rows[r][idx], name, r + 1));
  }
  return out;
}

bool has_column(const csv::Table& table, const std::string& name) {
  return csv::find_column(table, name) != static_cast<std::size_t>(-1);
}

mcdm::ScoreMethod method_from_name(const std::string& name) {
  if (name == "row-sum") {
    return mcdm::ScoreMethod::RowSum;
  }
  if (name == "closeness-formula") {
    return mcdm::ScoreMethod::Closeness;
  }
  if (name == "standard-topsis") {
    return mcdm::ScoreMethod::StandardTopsis;
  }
  throw validation_error("unknown score method: " + name);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw parse_error("cannot create output directory " + dir + ": " +
                      ec.message());
  }
}

// The zeta signal evaluated record by record.  Built by hand because the
// grid helpers demand a strictly increasing axis, while rank-mapped macro
// series keep record order (which can dip).
zeta::ZetaSignal pointwise_signal(const std::vector<double>& t_values,
                                  zeta::SignalMode mode) {
  zeta::ZetaSignal signal;
  signal.mode = mode;
  signal.samples.reserve(t_values.size());
  double sum = 0.0;
  for (const double t : t_values) {
    zeta::ZetaSample sample;
    sample.t = t;
    sample.value = zeta::evaluate({0.5, t});
    sample.signal = reduce(sample.value, mode);
    sum += sample.signal;
    signal.samples.push_back(sample);
  }
  signal.mean = sum / static_cast<double>(t_values.size());
  return signal;
}

} // namespace

nlohmann::json config_to_json(const PipelineConfig& c) {
  nlohmann::json doc;
  doc["input"] = c.input;
  doc["output_dir"] = c.output_dir;
  doc["model"] = c.model;
  doc["pairwise"] = c.pairwise;
  doc["alpha"] = c.alpha;
  doc["alpha_grid"] = c.alpha_grid;
  if (c.zeta_mean) {
    doc["zeta_mean"] = *c.zeta_mean;
  } else {
    doc["zeta_mean"] = nullptr;
  }
  doc["beta"] = c.beta;
  doc["signal_mode"] = mode_name(c.signal_mode);
  doc["index_mode"] = index_name(c.index_mode);
  doc["t_lo"] = c.t_lo;
  doc["t_hi"] = c.t_hi;
  doc["t_step"] = c.t_step;
  doc["zero_threshold"] = c.zero_threshold;
  doc["arima"] = {{"p", c.arima_spec.p}, {"d", c.arima_spec.d},
                  {"q", c.arima_spec.q}};
  doc["with_arima"] = c.with_arima;
  doc["shock"] = {{"std", c.shock.std},
                  {"iterations", c.shock.iterations},
                  {"seed", c.shock.seed}};
  doc["threads"] = c.threads;
  doc["train_iters"] = c.train_iters;
  doc["train_tol"] = c.train_tol;
  doc["peaks"] = c.peaks;
  doc["score_method"] = c.score_method;
  return doc;
}

PipelineConfig config_from_json(const nlohmann::json& doc) {
  PipelineConfig c;
  try {
    c.input = doc.value("input", c.input);
    c.output_dir = doc.value("output_dir", c.output_dir);
    c.model = doc.value("model", c.model);
    c.pairwise = doc.value("pairwise", c.pairwise);
    c.alpha = doc.value("alpha", c.alpha);
    c.alpha_grid = doc.value("alpha_grid", c.alpha_grid);
    if (doc.contains("zeta_mean") && !doc["zeta_mean"].is_null()) {
      c.zeta_mean = doc["zeta_mean"].get<double>();
    }
    c.beta = doc.value("beta", c.beta);
    c.signal_mode = mode_from_name(doc.value("signal_mode", "real"));
    c.index_mode = index_from_name(doc.value("index_mode", "rank"));
    c.t_lo = doc.value("t_lo", c.t_lo);
    c.t_hi = doc.value("t_hi", c.t_hi);
    c.t_step = doc.value("t_step", c.t_step);
    c.zero_threshold = doc.value("zero_threshold", c.zero_threshold);
    if (doc.contains("arima")) {
      c.arima_spec.p = doc["arima"].value("p", c.arima_spec.p);
      c.arima_spec.d = doc["arima"].value("d", c.arima_spec.d);
      c.arima_spec.q = doc["arima"].value("q", c.arima_spec.q);
    }
    c.with_arima = doc.value("with_arima", c.with_arima);
    if (doc.contains("shock")) {
      c.shock.std = doc["shock"].value("std", c.shock.std);
      c.shock.iterations = doc["shock"].value("iterations", c.shock.iterations);
      c.shock.seed = doc["shock"].value("seed", c.shock.seed);
    }
    c.threads = doc.value("threads", c.threads);
    c.train_iters = doc.value("train_iters", c.train_iters);
    c.train_tol = doc.value("train_tol", c.train_tol);
    c.peaks = doc.value("peaks", c.peaks);
    c.score_method = doc.value("score_method", c.score_method);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("configuration JSON is malformed: ") +
                      e.what());
  }
  return c;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (const unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::string checksum_hex(std::uint64_t digest) {
  static const char* kDigits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[digest & 0xF];
    digest >>= 4;
  }
  return out;
}

nlohmann::json manifest_to_json(const RunManifest& m) {
  nlohmann::json doc;
  doc["command"] = m.command;
  doc["tool_version"] = m.tool_version;
  doc["created_utc"] = m.created_utc;
  doc["seed"] = m.seed;
  doc["config"] = config_to_json(m.config);
  doc["outputs"] = nlohmann::json::object();
  for (const auto& [name, record] : m.outputs) {
    doc["outputs"][name] = {{"fnv1a64", record.checksum},
                            {"bytes", record.bytes}};
  }
  return doc;
}

RunManifest manifest_from_json(const nlohmann::json& doc) {
  RunManifest m;
  try {
    m.command = doc.at("command").get<std::string>();
    m.tool_version = doc.value("tool_version", std::string());
    m.created_utc = doc.value("created_utc", std::string());
    m.seed = doc.value("seed", std::uint64_t{0});
    m.config = config_from_json(doc.at("config"));
    if (doc.contains("outputs")) {
      for (const auto& [name, record] : doc["outputs"].items()) {
        m.outputs[name] = {record.at("fnv1a64").get<std::string>(),
                           record.at("bytes").get<std::uint64_t>()};
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("manifest JSON is malformed: ") + e.what());
  }
  return m;
}

std::vector<std::string> cmd_zeta(const PipelineConfig& config) {
  if (!(config.t_step > 0.0)) {
    throw validation_error("t_step must be positive");
  }
  if (!(config.t_hi >= config.t_lo)) {
    throw validation_error("empty t range: t_hi is below t_lo");
  }
  ensure_dir(config.output_dir);

  std::vector<std::vector<std::string>> rows;
  const double span = config.t_hi - config.t_lo;
  const auto count = static_cast<std::size_t>(
      std::floor(span / config.t_step + 1e-9));
  for (std::size_t k = 0; k <= count; ++k) {
    const double t = config.t_lo + static_cast<double>(k) * config.t_step;
    const auto value = zeta::evaluate({0.5, t});
    rows.push_back({csv::format_number(t), csv::format_number(value.real()),
                    csv::format_number(value.imag()),
                    csv::format_number(std::abs(value))});
  }
  csv::write_file(join(config.output_dir, "zeta_signal.csv"),
                  {"t", "re", "im", "abs"}, rows);

  const auto zeros = zeta::locate_zero_candidates(
      config.t_lo, config.t_hi, config.t_step, config.zero_threshold);
  std::vector<std::vector<std::string>> zero_rows;
  nlohmann::json zero_list = nlohmann::json::array();
  for (const auto& z : zeros) {
    zero_rows.push_back(
        {csv::format_number(z.t), csv::format_number(z.abs_value)});
    zero_list.push_back(z.t);
  }
  csv::write_file(join(config.output_dir, "zeta_zeros.csv"), {"t", "abs"},
                  zero_rows);

  // Early-warning profile: candidate density over the full sweep window.
  nlohmann::json density_list = nlohmann::json::array();
  if (span > 0.0) {
    for (const auto& point : zeta::zero_density(zeros, span)) {
      density_list.push_back({{"window_center", point.window_center},
                              {"density", point.density}});
    }
  }

  write_json(join(config.output_dir, "zeta_report.json"),
             {{"sigma", 0.5},
              {"t_lo", config.t_lo},
              {"t_hi", config.t_hi},
              {"t_step", config.t_step},
              {"points", rows.size()},
              {"zero_candidates", zero_list},
              {"zero_density", density_list}});
  return {"zeta_signal.csv", "zeta_zeros.csv", "zeta_report.json"};
}

namespace {

struct ForecastInput {
  std::vector<double> t;
  zeta::ZetaSignal signal;
  std::vector<double> baseline;
  std::vector<double> arima_column; // empty unless provided or fitted
  bool arima_fitted = false;
};

// Fixture-signal mode: columns t, zeta, fpas.  Macro mode: mandatory macro
// columns plus fpas; t comes from the transform, the signal from the
// critical line.
ForecastInput load_forecast_input(const PipelineConfig& config) {
  const auto table = csv::read_file(config.input);
  ForecastInput input;

  if (has_column(table, "zeta")) {
    input.t = number_column(table, "t", "time axis");
    const auto signals = number_column(table, "zeta", "zeta signal");
    input.signal = zeta::signal_from_values(input.t, signals);
  } else {
    const auto series = data::ingest_csv(config.input, data::CsvSchema::identity(),
                                         config.beta);
    input.t = data::index_map(data::t_transform(series), config.index_mode);
    input.signal = pointwise_signal(input.t, config.signal_mode);
  }
  input.baseline = number_column(table, "fpas", "baseline forecast");

  if (has_column(table, "arima")) {
    input.arima_column = number_column(table, "arima", "arima forecast");
  } else if (config.with_arima) {
    std::vector<double> actual;
    if (has_column(table, "actual")) {
      actual = number_column(table, "actual", "actual inflation");
    } else if (has_column(table, "inflation_actual")) {
      actual = number_column(table, "inflation_actual", "actual inflation");
    } else {
      throw validation_error(
          "with_arima requires an actual/inflation_actual column to fit on");
    }
    const auto fit = arima::fit(actual, config.arima_spec);
    input.arima_column = arima::fitted_values(fit, actual);
    input.arima_fitted = true;
  }
  return input;
}

} // namespace

std::vector<std::string> cmd_forecast(const PipelineConfig& config) {
  const auto input = load_forecast_input(config);
  const auto fc = forecast::correct(input.baseline, input.signal, config.alpha,
                                    config.zeta_mean);
  ensure_dir(config.output_dir);

  std::vector<std::string> header{"t", "zeta", "fpas", "fpas_zeta", "delta"};
  const bool with_arima = !input.arima_column.empty();
  if (with_arima) {
    header.push_back("arima");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < fc.t.size(); ++i) {
    std::vector<std::string> row{csv::format_number(fc.t[i]),
                                 csv::format_number(fc.signal[i]),
                                 csv::format_number(fc.baseline[i]),
                                 csv::format_number(fc.corrected[i]),
                                 csv::format_number(fc.delta[i])};
    if (with_arima) {
      row.push_back(csv::format_number(input.arima_column[i]));
    }
    rows.push_back(std::move(row));
  }
  csv::write_file(join(config.output_dir, "forecast.csv"), header, rows);

  write_json(join(config.output_dir, "forecast_report.json"),
             {{"alpha", fc.alpha},
              {"zeta_mean", fc.zeta_mean},
              {"periods", fc.t.size()},
              {"arima_column", with_arima},
              {"arima_fitted", input.arima_fitted}});
  return {"forecast.csv", "forecast_report.json"};
}

std::vector<std::string> cmd_calibrate(const PipelineConfig& config) {
  const auto table = csv::read_file(config.input);
  const auto t = number_column(table, "t", "time axis");
  const auto signals = number_column(table, "zeta", "zeta signal");
  const auto baseline = number_column(table, "fpas", "baseline forecast");
  const auto actual = number_column(table, "actual", "actual inflation");
  const auto signal = zeta::signal_from_values(t, signals);

  const auto grid = config.alpha_grid.empty() ? forecast::default_alpha_grid()
                                              : config.alpha_grid;
  const auto result = forecast::calibrate_alpha(baseline, signal, actual, grid,
                                                config.zeta_mean);
  ensure_dir(config.output_dir);

  std::vector<std::vector<std::string>> rows;
  double rmse_at_star = 0.0;
  for (const auto& [alpha, rmse] : result.rmse_curve) {
    rows.push_back({csv::format_number(alpha), csv::format_number(rmse)});
    if (alpha == result.alpha_star) {
      rmse_at_star = rmse;
    }
  }
  csv::write_file(join(config.output_dir, "calibration.csv"),
                  {"alpha", "rmse"}, rows);
  write_json(join(config.output_dir, "calibration_report.json"),
             {{"alpha_star", result.alpha_star},
              {"rmse_at_star", rmse_at_star},
              {"grid_points", rows.size()}});
  return {"calibration.csv", "calibration_report.json"};
}

std::vector<std::string> cmd_phases(const PipelineConfig& config) {
  hmm::HmmModel model;
  if (config.model.empty()) {
    model = hmm::default_phase_model();
  } else {
    model = hmm::model_from_json(parse_json_file(config.model));
  }

  const auto table = csv::read_file(config.input);
  std::string value_column = "inflation";
  if (!has_column(table, value_column)) {
    value_column = "value";
  }
  const auto obs = number_column(table, value_column, "observation");
  const std::size_t period_idx = csv::find_column(table, "period");

  ensure_dir(config.output_dir);
  std::vector<std::string> written;

  bool trained = false;
  if (config.train_iters > 0) {
    const auto result =
        hmm::baum_welch(model, obs, config.train_iters, config.train_tol);
    model = result.model;
    trained = true;
    write_json(join(config.output_dir, "phases_model.json"),
               hmm::to_json(model));
    written.push_back("phases_model.json");
  }

  const auto fwd = hmm::forward_filter(model, obs);
  const auto shares = hmm::phase_distribution(fwd.posterior);
  const auto vit = hmm::viterbi(model, obs);

  std::vector<std::string> header{"period"};
  for (const auto& label : model.states) {
    header.push_back(label);
  }
  header.push_back("viterbi");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < obs.size(); ++r) {
    std::vector<std::string> row;
    row.push_back(period_idx == static_cast<std::size_t>(-1)
                      ? std::to_string(r + 1)
                      : table.rows[r][period_idx]);
    for (const double share : shares[r]) {
      row.push_back(csv::format_number(share));
    }
    row.push_back(vit.path[r]);
    rows.push_back(std::move(row));
  }
  csv::write_file(join(config.output_dir, "phases.csv"), header, rows);
  written.insert(written.begin(), "phases.csv");

  write_json(join(config.output_dir, "phases_report.json"),
             {{"log_likelihood", fwd.log_likelihood},
              {"viterbi_log_prob", vit.log_prob},
              {"states", model.states},
              {"periods", obs.size()},
              {"trained", trained}});
  written.push_back("phases_report.json");
  return written;
}

std::vector<std::string> cmd_spectrum(const PipelineConfig& config) {
  const auto table = csv::read_file(config.input);
  const auto t = number_column(table, "t", "time axis");
  std::string value_column = "value";
  for (const char* fallback : {"zeta", "re"}) {
    if (!has_column(table, value_column)) {
      value_column = fallback;
    }
  }
  const auto values = number_column(table, value_column, "signal");

  if (t.size() < 2) {
    throw validation_error("spectrum needs at least two samples");
  }
  const double dt = t[1] - t[0];
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (std::abs(t[i + 1] - t[i] - dt) > 1e-9 * std::max(1.0, std::abs(dt))) {
      throw validation_error("spectrum needs a uniformly spaced time axis");
    }
  }

  const auto spectrum = spectral::decompose(values, dt);
  const auto peaks = spectral::top_peaks(spectrum, config.peaks);
  ensure_dir(config.output_dir);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < spectrum.frequencies.size(); ++k) {
    rows.push_back({csv::format_number(spectrum.frequencies[k]),
                    csv::format_number(spectrum.amplitudes[k].real()),
                    csv::format_number(spectrum.amplitudes[k].imag()),
                    csv::format_number(spectrum.power[k])});
  }
  csv::write_file(join(config.output_dir, "spectrum.csv"),
                  {"omega", "re", "im", "power"}, rows);

  std::vector<std::vector<std::string>> peak_rows;
  nlohmann::json peak_list = nlohmann::json::array();
  for (const auto& peak : peaks) {
    peak_rows.push_back({csv::format_number(peak.omega),
                         csv::format_number(peak.amplitude)});
    peak_list.push_back({{"omega", peak.omega}, {"amplitude", peak.amplitude}});
  }
  csv::write_file(join(config.output_dir, "spectrum_peaks.csv"),
                  {"omega", "amplitude"}, peak_rows);

  write_json(join(config.output_dir, "spectrum_report.json"),
             {{"samples", values.size()},
              {"sample_spacing", dt},
              {"peaks", peak_list}});
  return {"spectrum.csv", "spectrum_peaks.csv", "spectrum_report.json"};
}

std::vector<std::string> cmd_simulate(const PipelineConfig& config) {
  const auto table = csv::read_file(config.input);
  forecast::ForecastSeries series;
  series.t = number_column(table, "t", "time axis");
  if (has_column(table, "fpas_zeta")) {
    // A forecast report: take the corrected path as given.
    series.corrected = number_column(table, "fpas_zeta", "corrected forecast");
    series.alpha = config.alpha;
  } else {
    const auto signals = number_column(table, "zeta", "zeta signal");
    const auto baseline = number_column(table, "fpas", "baseline forecast");
    series = forecast::correct(baseline, zeta::signal_from_values(series.t, signals),
                               config.alpha, config.zeta_mean);
  }

  const auto bands = stochastic::simulate(series, config.shock, config.threads);
  ensure_dir(config.output_dir);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t p = 0; p < bands.mean.size(); ++p) {
    rows.push_back({csv::format_number(series.t[p]),
                    csv::format_number(bands.mean[p]),
                    csv::format_number(bands.std[p]),
                    csv::format_number(bands.q05[p]),
                    csv::format_number(bands.q50[p]),
                    csv::format_number(bands.q95[p])});
  }
  csv::write_file(join(config.output_dir, "bands.csv"),
                  {"t", "mean", "std", "q05", "q50", "q95"}, rows);

  write_json(join(config.output_dir, "simulate_report.json"),
             {{"iterations", config.shock.iterations},
              {"shock_std", config.shock.std},
              {"seed", config.shock.seed},
              {"periods", bands.mean.size()}});
  return {"bands.csv", "simulate_report.json"};
}

std::vector<std::string> cmd_compare(const PipelineConfig& config) {
  auto matrix = mcdm::decision_from_csv(config.input);

  std::optional<double> consistency_ratio;
  if (!config.pairwise.empty()) {
    const auto pairwise = mcdm::pairwise_from_csv(config.pairwise);
    const auto ahp = mcdm::ahp_weights(pairwise);
    if (ahp.weights.size() != matrix.criteria.size()) {
      throw validation_error(
          "pairwise matrix size does not match the criterion count");
    }
    matrix.weights = ahp.weights;
    consistency_ratio = ahp.consistency_ratio;
  }

  const auto method = method_from_name(config.score_method);
  mcdm::RankingReport report;
  switch (method) {
    case mcdm::ScoreMethod::RowSum:
      report = mcdm::score_row_sum(matrix);
      break;
    case mcdm::ScoreMethod::Closeness: {
      // Ideal/anti-ideal derived per criterion from the data (benefit
      // convention: larger is better).
      std::vector<double> d_plus(matrix.criteria.size()),
          d_minus(matrix.criteria.size());
      for (std::size_t j = 0; j < matrix.criteria.size(); ++j) {
        double lo = matrix.values[0][j];
        double hi = matrix.values[0][j];
        for (const auto& row : matrix.values) {
          lo = std::min(lo, row[j]);
          hi = std::max(hi, row[j]);
        }
        d_plus[j] = hi;
        d_minus[j] = lo;
      }
      report = mcdm::score_closeness(matrix, d_plus, d_minus);
      break;
    }
    case mcdm::ScoreMethod::StandardTopsis:
      report = mcdm::score_standard_topsis(matrix);
      break;
  }

  ensure_dir(config.output_dir);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.models.size(); ++i) {
    rows.push_back({report.models[i], csv::format_number(report.scores[i]),
                    std::to_string(report.ranks[i])});
  }
  csv::write_file(join(config.output_dir, "ranking.csv"),
                  {"model", "score", "rank"}, rows);

  nlohmann::json doc{{"method", mcdm::method_name(report.method)},
                     {"models", report.models},
                     {"scores", report.scores},
                     {"ranks", report.ranks}};
  if (consistency_ratio) {
    doc["consistency_ratio"] = *consistency_ratio;
  }
  write_json(join(config.output_dir, "ranking_report.json"), doc);
  return {"ranking.csv", "ranking_report.json"};
}

RunManifest run_command(const std::string& command,
                        const PipelineConfig& config) {
  std::vector<std::string> files;
  if (command == "zeta") {
    files = cmd_zeta(config);
  } else if (command == "forecast") {
    files = cmd_forecast(config);
  } else if (command == "calibrate") {
    files = cmd_calibrate(config);
  } else if (command == "phases") {
    files = cmd_phases(config);
  } else if (command == "spectrum") {
    files = cmd_spectrum(config);
  } else if (command == "simulate") {
    files = cmd_simulate(config);
  } else if (command == "compare") {
    files = cmd_compare(config);
  } else {
    throw validation_error("unknown command: " + command);
  }

  RunManifest manifest;
  manifest.command = command;
  manifest.tool_version = kVersion;
  manifest.created_utc = utc_now();
  manifest.seed = config.shock.seed;
  manifest.config = config;
  for (const auto& name : files) {
    const auto bytes = read_bytes(join(config.output_dir, name));
    manifest.outputs[name] = {checksum_hex(fnv1a64(bytes)), bytes.size()};
  }
  write_json(join(config.output_dir, command + "_manifest.json"),
             manifest_to_json(manifest));
  return manifest;
}

RunManifest replay(const std::string& manifest_path) {
  const auto recorded = manifest_from_json(parse_json_file(manifest_path));
  const auto fresh = run_command(recorded.command, recorded.config);
  for (const auto& [name, record] : recorded.outputs) {
    const auto it = fresh.outputs.find(name);
    if (it == fresh.outputs.end()) {
      throw validation_error("replay did not reproduce output " + name);
    }
    if (it->second.checksum != record.checksum ||
        it->second.bytes != record.bytes) {
      throw validation_error("replay mismatch for " + name + ": expected " +
                             record.checksum + ", got " + it->second.checksum);
    }
  }
  return fresh;
}

} // namespace zetacast::pipeline
