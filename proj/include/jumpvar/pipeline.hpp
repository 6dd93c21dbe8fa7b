#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jumpvar/changepoint.hpp"
#include "jumpvar/levy.hpp"
#include "jumpvar/levy_var.hpp"

namespace jumpvar {

/// Everything a full pipeline run depends on; serializable so a saved config
/// reproduces a run byte-for-byte.
struct RunConfig {
    std::string input_csv;
    std::string output_dir;
    double alpha = 0.99;
    double penalty = ChangepointConfig::kAutoPenalty;  // auto = 2 ln n
    std::size_t min_seg_len = 2;
    std::size_t min_window = 30;
    std::size_t dq_lags = 4;
    std::vector<double> weights;  // empty = equal weights
    std::optional<LevyModel> levy;

    void validate() const;
    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

/// Runs ingest -> detect -> adjust -> var -> backtest, emitting
/// adjusted_prices.csv, jump_profile.csv, var_series.csv, backtest.json and
/// run_manifest.json into the output directory. Stages communicate through
/// the written artifacts so partial re-runs from cached intermediates match
/// full runs exactly.
void run_pipeline(const RunConfig& config);

/// One synthetic asset: geometric Brownian motion plus injected level shifts.
struct SyntheticAsset {
    std::string id;
    double s0 = 100.0;
    double mu = 0.0;      // drift per day (log)
    double sigma = 0.01;  // volatility per sqrt(day)
    std::vector<std::pair<std::size_t, double>> jumps;  // (day index, level shift)
};

struct SyntheticSpec {
    std::size_t days = 250;
    Date start_date = Date(2020, 1, 1);
    std::vector<SyntheticAsset> assets;

    nlohmann::json to_json() const;
    static SyntheticSpec from_json(const nlohmann::json& j);
};

struct SyntheticTruth {
    std::string asset_id;
    std::size_t day = 0;
    Date date;
    double size = 0.0;
};

/// Generates the panel on a weekday calendar and records the injected jumps
/// as ground truth for detector scoring.
Panel generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed,
                         std::vector<SyntheticTruth>* truth = nullptr);

void write_truth_csv(const std::vector<SyntheticTruth>& truth, const std::string& path);

/// Artifact readers used by downstream pipeline stages and partial re-runs.
std::vector<JumpProfile> read_jump_profile_csv(const std::string& path, const Panel& panel);
std::vector<VaRSeries> read_var_series_csv(const std::string& path, double alpha);

void write_jump_profile_csv(const std::vector<JumpProfile>& profiles, const Panel& panel,
                            const std::string& path);
void write_var_series_csv(const std::vector<VaRSeries>& with_jumps,
                          const std::vector<VaRSeries>& without_jumps,
                          const VaRSeries* general_levy, const std::string& path);
void write_jumps_csv(const std::vector<JumpProfile>& profiles, const Panel& panel,
                     const std::string& path);

}  // namespace jumpvar
