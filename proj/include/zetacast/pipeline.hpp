#pragma once

// Pipeline orchestration: one configuration struct shared by all
// subcommands, stage runners that emit CSV + JSON reports, and a run
// manifest that records configuration, seed, version, and output
// checksums so any run can be replayed and verified byte for byte.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetacast/arima.hpp"
#include "zetacast/data.hpp"
#include "zetacast/mcdm.hpp"
#include "zetacast/stochastic.hpp"
#include "zetacast/zeta.hpp"

namespace zetacast::pipeline {

struct PipelineConfig {
  // Paths.
  std::string input;          // stage input CSV
  std::string output_dir = "."; // reports land here
  std::string model;          // phase model JSON (empty: built-in default)
  std::string pairwise;       // AHP comparison CSV (empty: CSV/equal weights)

  // Correction parameters.
  double alpha = 0.5;
  std::vector<double> alpha_grid;    // empty: default 0.1..1.0 grid
  std::optional<double> zeta_mean;   // anchor override
  double beta = 0.1;                 // policy-rate coefficient
  zeta::SignalMode signal_mode = zeta::SignalMode::RealPart;
  data::IndexMode index_mode = data::IndexMode::Rank;

  // Critical-line sampling grid (zeta subcommand).
  double t_lo = 10.0;
  double t_hi = 30.0;
  double t_step = 0.1;
  double zero_threshold = 1e-3;

  // Baseline model.
  arima::ArimaSpec arima_spec;
  bool with_arima = false;

  // Monte Carlo shocks.
  stochastic::ShockSpec shock;
  int threads = 1;

  // Phase identification.
  int train_iters = 0;   // Baum-Welch updates before filtering (0: none)
  double train_tol = 1e-8;

  // Spectral analysis.
  int peaks = 3;

  // Model comparison.
  std::string score_method = "row-sum"; // row-sum | closeness-formula | standard-topsis
};

nlohmann::json config_to_json(const PipelineConfig& config);
PipelineConfig config_from_json(const nlohmann::json& doc);

struct OutputRecord {
  std::string checksum; // FNV-1a 64-bit, hex
  std::uint64_t bytes = 0;
};

struct RunManifest {
  std::string command;
  std::string tool_version;
  std::string created_utc; // ISO 8601
  std::uint64_t seed = 0;
  PipelineConfig config;
  std::map<std::string, OutputRecord> outputs; // file name -> digest
};

nlohmann::json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& doc);

// FNV-1a 64-bit over raw bytes; the manifest stores it zero-padded hex.
std::uint64_t fnv1a64(const std::string& bytes);
std::string checksum_hex(std::uint64_t digest);

// Stage runners.  Each returns the list of files it wrote (relative to
// config.output_dir).  Errors surface as the underlying module's
// exceptions.
std::vector<std::string> cmd_zeta(const PipelineConfig& config);
std::vector<std::string> cmd_forecast(const PipelineConfig& config);
std::vector<std::string> cmd_calibrate(const PipelineConfig& config);
std::vector<std::string> cmd_phases(const PipelineConfig& config);
std::vector<std::string> cmd_spectrum(const PipelineConfig& config);
std::vector<std::string> cmd_simulate(const PipelineConfig& config);
std::vector<std::string> cmd_compare(const PipelineConfig& config);

// Runs one subcommand, checksums its outputs, and writes
// `<command>_manifest.json` next to them.  Returns the manifest.
RunManifest run_command(const std::string& command,
                        const PipelineConfig& config);

// Re-runs the manifest's command with its recorded configuration and
// verifies that every output file reproduces its recorded checksum.
// Throws validation_error on the first mismatch.
RunManifest replay(const std::string& manifest_path);

} // namespace zetacast::pipeline
