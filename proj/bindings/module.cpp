// Python surface over the C++ core.  One submodule per library namespace,
// mirroring the C++ API: zeta, data, forecast, hmm, spectral, stochastic,
// arima, mcdm.  Structs bind as plain attribute holders; functions keep
// their C++ contracts (and exceptions, which pybind11 maps to RuntimeError
// subclasses or ValueError as appropriate).

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "zetacast/arima.hpp"
#include "zetacast/data.hpp"
#include "zetacast/forecast.hpp"
#include "zetacast/hmm.hpp"
#include "zetacast/mcdm.hpp"
#include "zetacast/spectral.hpp"
#include "zetacast/stochastic.hpp"
#include "zetacast/version.hpp"
#include "zetacast/zeta.hpp"

namespace py = pybind11;

using namespace zetacast;

namespace {

zeta::EvalOptions make_opts(double tol, std::int64_t term_budget) {
  zeta::EvalOptions opts;
  opts.tol = tol;
  opts.term_budget = term_budget;
  return opts;
}

void bind_zeta(py::module_& m) {
  py::enum_<zeta::SignalMode>(m, "SignalMode")
      .value("RealPart", zeta::SignalMode::RealPart)
      .value("Modulus", zeta::SignalMode::Modulus);

  py::class_<zeta::ZetaSample>(m, "ZetaSample")
      .def_readonly("t", &zeta::ZetaSample::t)
      .def_readonly("value", &zeta::ZetaSample::value)
      .def_readonly("signal", &zeta::ZetaSample::signal)
      .def("__repr__", [](const zeta::ZetaSample& s) {
        return "ZetaSample(t=" + std::to_string(s.t) +
               ", signal=" + std::to_string(s.signal) + ")";
      });

  py::class_<zeta::ZetaSignal>(m, "ZetaSignal")
      .def_readonly("samples", &zeta::ZetaSignal::samples)
      .def_readonly("mode", &zeta::ZetaSignal::mode)
      .def_readonly("mean", &zeta::ZetaSignal::mean)
      .def("__len__",
           [](const zeta::ZetaSignal& s) { return s.samples.size(); });

  py::class_<zeta::ZeroCandidate>(m, "ZeroCandidate")
      .def_readonly("t", &zeta::ZeroCandidate::t)
      .def_readonly("abs_value", &zeta::ZeroCandidate::abs_value)
      .def("__repr__", [](const zeta::ZeroCandidate& z) {
        return "ZeroCandidate(t=" + std::to_string(z.t) + ")";
      });

  py::class_<zeta::DensityPoint>(m, "DensityPoint")
      .def_readonly("window_center", &zeta::DensityPoint::window_center)
      .def_readonly("density", &zeta::DensityPoint::density);

  m.def(
      "evaluate",
      [](double sigma, double t, double tol, std::int64_t term_budget) {
        return zeta::evaluate({sigma, t}, make_opts(tol, term_budget));
      },
      py::arg("sigma"), py::arg("t"), py::arg("tol") = 1e-10,
      py::arg("term_budget") = 1'000'000,
      "Riemann zeta at s = sigma + i t via the accelerated eta series.");

  m.def(
      "sample_signal",
      [](const std::vector<double>& t_values, zeta::SignalMode mode,
         double tol, std::int64_t term_budget) {
        return zeta::sample_signal(t_values, mode, make_opts(tol, term_budget));
      },
      py::arg("t_values"), py::arg("mode") = zeta::SignalMode::RealPart,
      py::arg("tol") = 1e-10, py::arg("term_budget") = 1'000'000,
      "Evaluate the critical-line signal on a strictly increasing t grid.");

  m.def("signal_from_values", &zeta::signal_from_values, py::arg("t_values"),
        py::arg("signals"),
        "Wrap precomputed signal values without re-evaluating zeta.");

  m.def(
      "locate_zero_candidates",
      [](double t_lo, double t_hi, double step, double threshold, double tol,
         std::int64_t term_budget) {
        return zeta::locate_zero_candidates(t_lo, t_hi, step, threshold,
                                            make_opts(tol, term_budget));
      },
      py::arg("t_lo"), py::arg("t_hi"), py::arg("step"),
      py::arg("threshold") = 1e-3, py::arg("tol") = 1e-10,
      py::arg("term_budget") = 1'000'000,
      "Grid-scan |zeta(1/2 + i t)| and refine local minima below threshold.");

  m.def("zero_density", &zeta::zero_density, py::arg("candidates"),
        py::arg("window"),
        "Sliding-window density of zero candidates per unit t.");
}

void bind_data(py::module_& m) {
  py::enum_<data::ShockKind>(m, "ShockKind")
      .value("Domestic", data::ShockKind::Domestic)
      .value("External", data::ShockKind::External);

  py::enum_<data::IndexMode>(m, "IndexMode")
      .value("Raw", data::IndexMode::Raw)
      .value("Rank", data::IndexMode::Rank);

  py::class_<data::MacroRecord>(m, "MacroRecord")
      .def(py::init<>())
      .def_readwrite("period", &data::MacroRecord::period)
      .def_readwrite("gdp_real", &data::MacroRecord::gdp_real)
      .def_readwrite("m3", &data::MacroRecord::m3)
      .def_readwrite("policy_rate", &data::MacroRecord::policy_rate)
      .def_readwrite("exchange_rate", &data::MacroRecord::exchange_rate)
      .def_readwrite("reer", &data::MacroRecord::reer)
      .def_readwrite("unemployment", &data::MacroRecord::unemployment)
      .def_readwrite("wage", &data::MacroRecord::wage)
      .def_readwrite("inflation_actual", &data::MacroRecord::inflation_actual)
      .def("__repr__", [](const data::MacroRecord& r) {
        return "MacroRecord(period='" + r.period + "')";
      });

  py::class_<data::MacroSeries>(m, "MacroSeries")
      .def(py::init<>())
      .def_readwrite("records", &data::MacroSeries::records)
      .def_readwrite("beta", &data::MacroSeries::beta)
      .def("__len__",
           [](const data::MacroSeries& s) { return s.records.size(); });

  py::class_<data::ShockAnnotation>(m, "ShockAnnotation")
      .def(py::init<>())
      .def_readwrite("period", &data::ShockAnnotation::period)
      .def_readwrite("kind", &data::ShockAnnotation::kind)
      .def_readwrite("label", &data::ShockAnnotation::label);

  m.def(
      "ingest_csv",
      [](const std::string& path,
         const std::optional<std::map<std::string, std::string>>& columns,
         double beta) {
        data::CsvSchema schema = data::CsvSchema::identity();
        if (columns) {
          schema.columns = *columns;
        }
        return data::ingest_csv(path, schema, beta);
      },
      py::arg("path"), py::arg("columns") = py::none(), py::arg("beta") = 0.1,
      "Read and validate a macro CSV file.  `columns` remaps canonical "
      "field names to CSV headers.");

  m.def("validate", &data::validate, py::arg("series"));
  m.def("validate_shocks", &data::validate_shocks, py::arg("series"),
        py::arg("shocks"));
  m.def("t_transform", &data::t_transform, py::arg("series"),
        "t_i = ln(gdp_i) + ln(m3_i) + beta * rate_i, order-preserving.");
  m.def("index_map", &data::index_map, py::arg("t_raw"), py::arg("mode"),
        "Raw passthrough or 1-based ascending ranks.");
  m.def("serialize_csv", &data::serialize_csv, py::arg("series"));
}

void bind_forecast(py::module_& m) {
  py::class_<forecast::ForecastSeries>(m, "ForecastSeries")
      .def_readonly("t", &forecast::ForecastSeries::t)
      .def_readonly("signal", &forecast::ForecastSeries::signal)
      .def_readonly("baseline", &forecast::ForecastSeries::baseline)
      .def_readonly("corrected", &forecast::ForecastSeries::corrected)
      .def_readonly("delta", &forecast::ForecastSeries::delta)
      .def_readonly("alpha", &forecast::ForecastSeries::alpha)
      .def_readonly("zeta_mean", &forecast::ForecastSeries::zeta_mean)
      .def("__len__",
           [](const forecast::ForecastSeries& s) { return s.t.size(); });

  py::class_<forecast::AccuracyReport>(m, "AccuracyReport")
      .def_readonly("rmse", &forecast::AccuracyReport::rmse)
      .def_readonly("mape", &forecast::AccuracyReport::mape);

  py::class_<forecast::CalibrationResult>(m, "CalibrationResult")
      .def_readonly("alpha_star", &forecast::CalibrationResult::alpha_star)
      .def_readonly("rmse_curve", &forecast::CalibrationResult::rmse_curve);

  m.def("correct", &forecast::correct, py::arg("baseline"), py::arg("signal"),
        py::arg("alpha"), py::arg("zeta_mean") = py::none(),
        "corrected_i = baseline_i + alpha * (signal_i - signal_mean).");

  m.def(
      "calibrate_alpha",
      [](const std::vector<double>& baseline, const zeta::ZetaSignal& signal,
         const std::vector<double>& actual,
         const std::optional<std::vector<double>>& grid,
         std::optional<double> zeta_mean) {
        return forecast::calibrate_alpha(
            baseline, signal, actual,
            grid ? *grid : forecast::default_alpha_grid(), zeta_mean);
      },
      py::arg("baseline"), py::arg("signal"), py::arg("actual"),
      py::arg("grid") = py::none(), py::arg("zeta_mean") = py::none(),
      "Exhaustive RMSE grid search; ties break toward the smaller alpha.");

  m.def("default_alpha_grid", &forecast::default_alpha_grid);
  m.def("rmse", &forecast::rmse, py::arg("pred"), py::arg("actual"));
  m.def("mape", &forecast::mape, py::arg("pred"), py::arg("actual"));
  m.def("accuracy", &forecast::accuracy, py::arg("pred"), py::arg("actual"));
}

void bind_hmm(py::module_& m) {
  py::class_<hmm::GaussianEmission>(m, "GaussianEmission")
      .def(py::init<>())
      .def(py::init([](double mean, double std) {
             return hmm::GaussianEmission{mean, std};
           }),
           py::arg("mean"), py::arg("std"))
      .def_readwrite("mean", &hmm::GaussianEmission::mean)
      .def_readwrite("std", &hmm::GaussianEmission::std)
      .def("__repr__", [](const hmm::GaussianEmission& e) {
        return "GaussianEmission(mean=" + std::to_string(e.mean) +
               ", std=" + std::to_string(e.std) + ")";
      });

  py::class_<hmm::HmmModel>(m, "HmmModel")
      .def(py::init<>())
      .def(py::init([](std::vector<std::string> states,
                       std::vector<double> initial,
                       std::vector<std::vector<double>> transition,
                       std::vector<hmm::GaussianEmission> emissions) {
             hmm::HmmModel model{std::move(states), std::move(initial),
                                 std::move(transition), std::move(emissions)};
             model.validate();
             return model;
           }),
           py::arg("states"), py::arg("initial"), py::arg("transition"),
           py::arg("emissions"))
      .def_readwrite("states", &hmm::HmmModel::states)
      .def_readwrite("initial", &hmm::HmmModel::initial)
      .def_readwrite("transition", &hmm::HmmModel::transition)
      .def_readwrite("emissions", &hmm::HmmModel::emissions)
      .def("state_count", &hmm::HmmModel::state_count)
      .def("validate", &hmm::HmmModel::validate);

  py::class_<hmm::ForwardResult>(m, "ForwardResult")
      .def_readonly("posterior", &hmm::ForwardResult::posterior)
      .def_readonly("log_likelihood", &hmm::ForwardResult::log_likelihood);

  py::class_<hmm::ViterbiResult>(m, "ViterbiResult")
      .def_readonly("path", &hmm::ViterbiResult::path)
      .def_readonly("indices", &hmm::ViterbiResult::indices)
      .def_readonly("log_prob", &hmm::ViterbiResult::log_prob);

  py::class_<hmm::TrainResult>(m, "TrainResult")
      .def_readonly("model", &hmm::TrainResult::model)
      .def_readonly("loglik_trace", &hmm::TrainResult::loglik_trace)
      .def_readonly("converged", &hmm::TrainResult::converged)
      .def_readonly("iterations", &hmm::TrainResult::iterations);

  m.def("default_phase_labels", &hmm::default_phase_labels);
  m.def("default_phase_model", &hmm::default_phase_model,
        "Reference four-phase model with its stationary initial vector.");
  m.def("stationary_distribution", &hmm::stationary_distribution,
        py::arg("transition"),
        "Left fixed point v = v P of a row-stochastic matrix.");
  m.def("forward_filter", &hmm::forward_filter, py::arg("model"),
        py::arg("obs"),
        "Filtered posteriors P(s_t | O_1..t) and the log-likelihood.");
  m.def("viterbi", &hmm::viterbi, py::arg("model"), py::arg("obs"),
        "Most likely phase sequence; ties break to the lowest state index.");
  m.def("baum_welch", &hmm::baum_welch, py::arg("init"), py::arg("obs"),
        py::arg("max_iter") = 100, py::arg("tol") = 1e-6,
        "EM re-estimation of initial, transition, and emission parameters.");
  m.def("phase_distribution", &hmm::phase_distribution, py::arg("posterior"),
        "Posterior rows rescaled to percent shares.");
}

void bind_spectral(py::module_& m) {
  py::class_<spectral::Spectrum>(m, "Spectrum")
      .def_readonly("frequencies", &spectral::Spectrum::frequencies)
      .def_readonly("amplitudes", &spectral::Spectrum::amplitudes)
      .def_readonly("power", &spectral::Spectrum::power)
      .def("__len__",
           [](const spectral::Spectrum& s) { return s.frequencies.size(); });

  py::class_<spectral::Peak>(m, "Peak")
      .def_readonly("omega", &spectral::Peak::omega)
      .def_readonly("amplitude", &spectral::Peak::amplitude)
      .def("__repr__", [](const spectral::Peak& p) {
        return "Peak(omega=" + std::to_string(p.omega) +
               ", amplitude=" + std::to_string(p.amplitude) + ")";
      });

  m.def("decompose", &spectral::decompose, py::arg("signal"),
        py::arg("sample_spacing"),
        "Forward transform with angular frequencies and a_k = X_k / N.");
  m.def("reconstruct", &spectral::reconstruct, py::arg("spectrum"),
        py::arg("t_grid"),
        "Synthesis sum_k a_k exp(i omega_k t) on an arbitrary t grid.");
  m.def("top_peaks", &spectral::top_peaks, py::arg("spectrum"), py::arg("k"),
        "The k positive-frequency bins with the largest |a|, descending.");
  m.def("truncate_top", &spectral::truncate_top, py::arg("spectrum"),
        py::arg("k"), "Spectrum restricted to DC plus the top-k peak pairs.");
  m.def("hann_window", &spectral::hann_window, py::arg("signal"));
}

void bind_stochastic(py::module_& m) {
  py::class_<stochastic::ShockSpec>(m, "ShockSpec")
      .def(py::init<>())
      .def(py::init([](double std, int iterations, std::uint64_t seed) {
             return stochastic::ShockSpec{std, iterations, seed};
           }),
           py::arg("std") = 0.8, py::arg("iterations") = 5000,
           py::arg("seed") = 42)
      .def_readwrite("std", &stochastic::ShockSpec::std)
      .def_readwrite("iterations", &stochastic::ShockSpec::iterations)
      .def_readwrite("seed", &stochastic::ShockSpec::seed);

  py::class_<stochastic::ForecastBands>(m, "ForecastBands")
      .def_readonly("mean", &stochastic::ForecastBands::mean)
      .def_readonly("std", &stochastic::ForecastBands::std)
      .def_readonly("q05", &stochastic::ForecastBands::q05)
      .def_readonly("q50", &stochastic::ForecastBands::q50)
      .def_readonly("q95", &stochastic::ForecastBands::q95);

  m.def("simulate", &stochastic::simulate, py::arg("series"), py::arg("spec"),
        py::arg("n_threads") = 1,
        "Monte Carlo shock bands; bit-identical at any thread count.");
  m.def("gaussian_draws", &stochastic::gaussian_draws, py::arg("n"),
        py::arg("seed"),
        "Standard-normal variates from SplitMix64 + Box-Muller.");
  m.def("substream_seed", &stochastic::substream_seed, py::arg("seed"),
        py::arg("index"));
  m.def("quantile_type7", &stochastic::quantile_type7, py::arg("sorted"),
        py::arg("p"),
        "Linear-interpolation quantile on an ascending-sorted sample.");
}

void bind_arima(py::module_& m) {
  py::class_<arima::ArimaSpec>(m, "ArimaSpec")
      .def(py::init<>())
      .def(py::init([](int p, int d, int q) {
             return arima::ArimaSpec{p, d, q};
           }),
           py::arg("p"), py::arg("d"), py::arg("q"))
      .def_readwrite("p", &arima::ArimaSpec::p)
      .def_readwrite("d", &arima::ArimaSpec::d)
      .def_readwrite("q", &arima::ArimaSpec::q)
      .def("__repr__", [](const arima::ArimaSpec& s) {
        return "ArimaSpec(" + std::to_string(s.p) + ", " + std::to_string(s.d) +
               ", " + std::to_string(s.q) + ")";
      });

  py::class_<arima::ArimaFit>(m, "ArimaFit")
      .def_readonly("spec", &arima::ArimaFit::spec)
      .def_readonly("ar_coeffs", &arima::ArimaFit::ar_coeffs)
      .def_readonly("ma_coeffs", &arima::ArimaFit::ma_coeffs)
      .def_readonly("intercept", &arima::ArimaFit::intercept)
      .def_readonly("sigma2", &arima::ArimaFit::sigma2);

  py::class_<arima::FitOptions>(m, "FitOptions")
      .def(py::init<>())
      .def_readwrite("max_iter", &arima::FitOptions::max_iter)
      .def_readwrite("tol", &arima::FitOptions::tol);

  m.def("fit", &arima::fit, py::arg("series"), py::arg("spec"),
        py::arg("options") = arima::FitOptions{},
        "Conditional-sum-of-squares fit via Nelder-Mead.");
  m.def("forecast", &arima::forecast, py::arg("fit"), py::arg("history"),
        py::arg("horizon"),
        "Iterated h-step forecasts, integrated back to levels.");
  m.def("fitted_values", &arima::fitted_values, py::arg("fit"),
        py::arg("series"));
  m.def("css", &arima::css, py::arg("series"), py::arg("fit"));
  m.def("is_stable", &arima::is_stable, py::arg("fit"));
}

void bind_mcdm(py::module_& m) {
  py::enum_<mcdm::ScoreMethod>(m, "ScoreMethod")
      .value("RowSum", mcdm::ScoreMethod::RowSum)
      .value("Closeness", mcdm::ScoreMethod::Closeness)
      .value("StandardTopsis", mcdm::ScoreMethod::StandardTopsis);

  py::class_<mcdm::PairwiseMatrix>(m, "PairwiseMatrix")
      .def(py::init<>())
      .def(py::init([](std::vector<std::vector<double>> values) {
             mcdm::PairwiseMatrix matrix{std::move(values)};
             matrix.validate();
             return matrix;
           }),
           py::arg("values"))
      .def_readwrite("values", &mcdm::PairwiseMatrix::values)
      .def("size", &mcdm::PairwiseMatrix::size)
      .def("validate", &mcdm::PairwiseMatrix::validate);

  py::class_<mcdm::AhpResult>(m, "AhpResult")
      .def_readonly("weights", &mcdm::AhpResult::weights)
      .def_readonly("lambda_max", &mcdm::AhpResult::lambda_max)
      .def_readonly("consistency_ratio", &mcdm::AhpResult::consistency_ratio);

  py::class_<mcdm::DecisionMatrix>(m, "DecisionMatrix")
      .def(py::init<>())
      .def(py::init([](std::vector<std::string> models,
                       std::vector<std::string> criteria,
                       std::vector<std::vector<double>> values,
                       std::vector<double> weights) {
             mcdm::DecisionMatrix matrix{std::move(models), std::move(criteria),
                                         std::move(values), std::move(weights)};
             matrix.validate();
             return matrix;
           }),
           py::arg("models"), py::arg("criteria"), py::arg("values"),
           py::arg("weights"))
      .def_readwrite("models", &mcdm::DecisionMatrix::models)
      .def_readwrite("criteria", &mcdm::DecisionMatrix::criteria)
      .def_readwrite("values", &mcdm::DecisionMatrix::values)
      .def_readwrite("weights", &mcdm::DecisionMatrix::weights)
      .def("validate", &mcdm::DecisionMatrix::validate);

  py::class_<mcdm::RankingReport>(m, "RankingReport")
      .def_readonly("models", &mcdm::RankingReport::models)
      .def_readonly("scores", &mcdm::RankingReport::scores)
      .def_readonly("ranks", &mcdm::RankingReport::ranks)
      .def_readonly("method", &mcdm::RankingReport::method);

  m.def("method_name", &mcdm::method_name, py::arg("method"));
  m.def("ahp_weights", &mcdm::ahp_weights, py::arg("matrix"),
        "Principal-eigenvector criterion weights with the consistency ratio.");
  m.def("score_row_sum", &mcdm::score_row_sum, py::arg("matrix"));
  m.def("score_closeness", &mcdm::score_closeness, py::arg("matrix"),
        py::arg("d_plus"), py::arg("d_minus"),
        "Closeness with caller-supplied ideal and anti-ideal per criterion.");
  m.def("score_standard_topsis", &mcdm::score_standard_topsis,
        py::arg("matrix"), "Textbook vector-normalized TOPSIS closeness.");
  m.def("decision_from_csv", &mcdm::decision_from_csv, py::arg("path"));
  m.def("pairwise_from_csv", &mcdm::pairwise_from_csv, py::arg("path"));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zeta-signal forecasting toolkit core.";
  m.attr("__version__") = zetacast::kVersion;

  auto zeta_mod = m.def_submodule("zeta", "Critical-line evaluation and zeros.");
  bind_zeta(zeta_mod);

  auto data_mod = m.def_submodule("data", "Macro ingestion and t transforms.");
  bind_data(data_mod);

  auto forecast_mod =
      m.def_submodule("forecast", "Cyclical correction and calibration.");
  bind_forecast(forecast_mod);

  auto hmm_mod = m.def_submodule("hmm", "Four-phase hidden Markov model.");
  bind_hmm(hmm_mod);

  auto spectral_mod = m.def_submodule("spectral", "Discrete Fourier analysis.");
  bind_spectral(spectral_mod);

  auto stochastic_mod =
      m.def_submodule("stochastic", "Monte Carlo shock propagation.");
  bind_stochastic(stochastic_mod);

  auto arima_mod = m.def_submodule("arima", "ARIMA comparison baseline.");
  bind_arima(arima_mod);

  auto mcdm_mod = m.def_submodule("mcdm", "AHP weights and model ranking.");
  bind_mcdm(mcdm_mod);
}
