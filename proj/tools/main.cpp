// zetacast command-line interface
//
// One subcommand per pipeline stage plus `replay`.  Every stage writes its
// reports and a run manifest into --out; diagnostics go to standard error
// and data only to files, so stdout stays clean for scripting.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetacast/errors.hpp"
#include "zetacast/pipeline.hpp"
#include "zetacast/version.hpp"

namespace {

using zetacast::pipeline::PipelineConfig;

zetacast::zeta::SignalMode mode_from(const std::string& name) {
  return name == "modulus" ? zetacast::zeta::SignalMode::Modulus
                           : zetacast::zeta::SignalMode::RealPart;
}

zetacast::data::IndexMode index_from(const std::string& name) {
  return name == "raw" ? zetacast::data::IndexMode::Raw
                       : zetacast::data::IndexMode::Rank;
}

void report(const zetacast::pipeline::RunManifest& manifest,
            const std::string& out_dir) {
  std::cerr << "zetacast: " << manifest.command << " wrote "
            << manifest.outputs.size() << " file(s) to " << out_dir
            << " (manifest: " << manifest.command << "_manifest.json)\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetacast: zeta-signal inflation forecasting pipeline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(zetacast::kVersion));
  app.set_config("--config", "",
                 "INI configuration file ([subcommand] sections; "
                 "command-line flags win");

  PipelineConfig cfg;
  std::string signal_mode = "real";
  std::string index_mode = "rank";
  std::vector<int> arima_order; // p,d,q
  double zeta_mean = 0.0;

  // --- zeta ---------------------------------------------------------
  auto* zeta_cmd = app.add_subcommand(
      "zeta", "Sample zeta(1/2 + i t) over a t grid and locate zero dips");
  zeta_cmd->add_option("--from", cfg.t_lo, "Grid start")
      ->capture_default_str();
  zeta_cmd->add_option("--to", cfg.t_hi, "Grid end")->capture_default_str();
  zeta_cmd->add_option("--step", cfg.t_step, "Grid spacing")
      ->capture_default_str();
  zeta_cmd->add_option("--threshold", cfg.zero_threshold,
                       "Zero-candidate modulus threshold")
      ->capture_default_str();

  // --- forecast -----------------------------------------------------
  auto* forecast_cmd = app.add_subcommand(
      "forecast",
      "Apply the cyclical zeta correction to a baseline forecast");
  forecast_cmd
      ->add_option("input", cfg.input,
                   "Forecast CSV (t,zeta,fpas) or macro CSV "
                   "(period,gdp_real,m3,policy_rate,...,fpas)")
      ->required();
  forecast_cmd->add_option("--alpha", cfg.alpha, "Modulation coefficient")
      ->capture_default_str();
  auto* forecast_mean =
      forecast_cmd->add_option("--zeta-mean", zeta_mean,
                               "Anchor override (default: signal mean)");
  forecast_cmd->add_option("--beta", cfg.beta, "Policy-rate coefficient")
      ->capture_default_str();
  forecast_cmd->add_option("--mode", signal_mode, "Signal reduction")
      ->check(CLI::IsMember({"real", "modulus"}))
      ->capture_default_str();
  forecast_cmd->add_option("--index", index_mode, "t-axis mapping")
      ->check(CLI::IsMember({"rank", "raw"}))
      ->capture_default_str();
  forecast_cmd
      ->add_option("--arima", arima_order, "ARIMA order p,d,q")
      ->delimiter(',')
      ->expected(3);
  forecast_cmd->add_flag("--with-arima", cfg.with_arima,
                         "Fit the ARIMA baseline on the actual column");

  // --- calibrate ----------------------------------------------------
  auto* calibrate_cmd = app.add_subcommand(
      "calibrate", "Grid-search alpha against actual inflation");
  calibrate_cmd
      ->add_option("input", cfg.input, "Calibration CSV (t,zeta,fpas,actual)")
      ->required();
  calibrate_cmd->add_option("--grid", cfg.alpha_grid,
                            "Alpha grid (ascending, comma separated)")
      ->delimiter(',');
  auto* calibrate_mean = calibrate_cmd->add_option(
      "--zeta-mean", zeta_mean, "Anchor override (default: signal mean)");

  // --- phases -------------------------------------------------------
  auto* phases_cmd = app.add_subcommand(
      "phases", "Filter phase probabilities over inflation observations");
  phases_cmd
      ->add_option("input", cfg.input,
                   "Observation CSV (period,inflation) or (period,value)")
      ->required();
  phases_cmd->add_option("--model", cfg.model,
                         "Phase model JSON (default: built-in four-phase)");
  phases_cmd->add_option("--train-iters", cfg.train_iters,
                         "Baum-Welch updates before filtering")
      ->capture_default_str();
  phases_cmd->add_option("--train-tol", cfg.train_tol,
                         "Baum-Welch convergence tolerance")
      ->capture_default_str();

  // --- spectrum -----------------------------------------------------
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Fourier decomposition of a sampled signal");
  spectrum_cmd
      ->add_option("input", cfg.input,
                   "Signal CSV with t plus value/zeta/re column")
      ->required();
  spectrum_cmd->add_option("--peaks", cfg.peaks, "Dominant harmonics to list")
      ->capture_default_str();

  // --- simulate -----------------------------------------------------
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo shock bands around the corrected forecast");
  simulate_cmd
      ->add_option("input", cfg.input,
                   "Forecast CSV (t,zeta,fpas) or a forecast report with "
                   "fpas_zeta")
      ->required();
  simulate_cmd->add_option("--alpha", cfg.alpha, "Modulation coefficient")
      ->capture_default_str();
  auto* simulate_mean = simulate_cmd->add_option(
      "--zeta-mean", zeta_mean, "Anchor override (default: signal mean)");
  simulate_cmd->add_option("--seed", cfg.shock.seed, "Simulation seed")
      ->capture_default_str();
  simulate_cmd
      ->add_option("--iterations", cfg.shock.iterations, "Simulation cycles")
      ->capture_default_str();
  simulate_cmd->add_option("--shock-std", cfg.shock.std,
                           "Shock standard deviation (pp)")
      ->capture_default_str();
  simulate_cmd->add_option("--threads", cfg.threads, "Worker threads")
      ->capture_default_str();

  // --- compare ------------------------------------------------------
  auto* compare_cmd = app.add_subcommand(
      "compare", "Rank candidate models over weighted criteria");
  compare_cmd
      ->add_option("input", cfg.input,
                   "Decision CSV (model,<criteria...>; optional weights row)")
      ->required();
  compare_cmd->add_option("--method", cfg.score_method, "Scoring rule")
      ->check(CLI::IsMember({"row-sum", "closeness-formula",
                             "standard-topsis"}))
      ->capture_default_str();
  compare_cmd->add_option("--pairwise", cfg.pairwise,
                          "AHP pairwise comparison CSV for criterion weights");

  // --- replay -------------------------------------------------------
  std::string manifest_path;
  auto* replay_cmd = app.add_subcommand(
      "replay", "Re-run a manifest and verify byte-identical outputs");
  replay_cmd->add_option("manifest", manifest_path, "Run manifest JSON")
      ->required();

  // Shared output flag on every stage command.
  for (auto* cmd : {zeta_cmd, forecast_cmd, calibrate_cmd, phases_cmd,
                    spectrum_cmd, simulate_cmd, compare_cmd}) {
    cmd->add_option("-o,--out", cfg.output_dir, "Report directory")
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  cfg.signal_mode = mode_from(signal_mode);
  cfg.index_mode = index_from(index_mode);
  if (!arima_order.empty()) {
    cfg.arima_spec = {arima_order[0], arima_order[1], arima_order[2]};
  }
  if (forecast_mean->count() || calibrate_mean->count() ||
      simulate_mean->count()) {
    cfg.zeta_mean = zeta_mean;
  }

  try {
    if (replay_cmd->parsed()) {
      const auto manifest = zetacast::pipeline::replay(manifest_path);
      std::cerr << "zetacast: replay verified " << manifest.outputs.size()
                << " output(s) of '" << manifest.command << "'\n";
      return 0;
    }
    for (const auto& [cmd, name] :
         {std::pair{zeta_cmd, "zeta"}, {forecast_cmd, "forecast"},
          {calibrate_cmd, "calibrate"}, {phases_cmd, "phases"},
          {spectrum_cmd, "spectrum"}, {simulate_cmd, "simulate"},
          {compare_cmd, "compare"}}) {
      if (cmd->parsed()) {
        report(zetacast::pipeline::run_command(name, cfg), cfg.output_dir);
        return 0;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "zetacast: error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "zetacast: no subcommand selected\n";
  return 1;
}
