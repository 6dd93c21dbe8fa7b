#include "jumpvar/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "jumpvar/backtest.hpp"
#include "jumpvar/jump_adjust.hpp"
#include "jumpvar/market_data.hpp"
#include "jumpvar/rng.hpp"
#include "jumpvar/text.hpp"

namespace jumpvar {

namespace {

double round_g9(double x) { return std::stod(fmt_g9(x)); }

std::vector<double> resolve_weights(const RunConfig& cfg, std::size_t n_assets) {
    if (cfg.weights.empty()) {
        return std::vector<double>(n_assets, 1.0 / static_cast<double>(n_assets));
    }
    if (cfg.weights.size() != n_assets) {
        throw std::runtime_error("config weights have " + std::to_string(cfg.weights.size()) +
                                 " entries but the panel has " + std::to_string(n_assets) +
                                 " assets");
    }
    return cfg.weights;
}

}  // namespace

void RunConfig::validate() const {
    if (input_csv.empty()) throw std::invalid_argument("config: input path required");
    if (output_dir.empty()) throw std::invalid_argument("config: output directory required");
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("config: alpha must be in (0,1), got " + std::to_string(alpha));
    }
    if (penalty != ChangepointConfig::kAutoPenalty && !(penalty >= 0.0)) {
        throw std::invalid_argument("config: penalty must be >= 0");
    }
    if (min_seg_len < 1) throw std::invalid_argument("config: min_seg_len must be >= 1");
    if (min_window < 2) throw std::invalid_argument("config: min_window must be >= 2");
    if (dq_lags < 1) throw std::invalid_argument("config: dq_lags must be >= 1");
    if (!weights.empty()) {
        double s = 0.0;
        for (double w : weights) s += w;
        if (std::abs(s - 1.0) > 1e-12) {
            throw std::invalid_argument("config: weights must sum to 1");
        }
    }
    if (levy) levy->validate();
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["input"] = input_csv;
    j["output_dir"] = output_dir;
    j["alpha"] = alpha;
    if (penalty == ChangepointConfig::kAutoPenalty) {
        j["penalty"] = nullptr;
    } else {
        j["penalty"] = penalty;
    }
    j["min_seg_len"] = min_seg_len;
    j["min_window"] = min_window;
    j["dq_lags"] = dq_lags;
    if (!weights.empty()) j["weights"] = weights;
    if (levy) j["levy"] = levy->to_json();
    return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig cfg;
    cfg.input_csv = j.value("input", std::string());
    cfg.output_dir = j.value("output_dir", std::string());
    cfg.alpha = j.value("alpha", 0.99);
    if (j.contains("penalty") && !j["penalty"].is_null()) {
        cfg.penalty = j["penalty"].get<double>();
    }
    cfg.min_seg_len = j.value("min_seg_len", std::size_t{2});
    cfg.min_window = j.value("min_window", std::size_t{30});
    cfg.dq_lags = j.value("dq_lags", std::size_t{4});
    if (j.contains("weights")) cfg.weights = j["weights"].get<std::vector<double>>();
    if (j.contains("levy") && !j["levy"].is_null()) cfg.levy = LevyModel::from_json(j["levy"]);
    return cfg;
}

void write_jumps_csv(const std::vector<JumpProfile>& profiles, const Panel& panel,
                     const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "asset,jump_date,jump_index\n";
    for (const auto& p : profiles) {
        for (std::size_t k = 0; k < p.count(); ++k) {
            out << p.asset_id << ',' << panel.dates.at(p.jpt[k]).to_string() << ',' << p.jpt[k]
                << '\n';
        }
    }
}

void write_jump_profile_csv(const std::vector<JumpProfile>& profiles, const Panel& panel,
                            const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "asset,jump_date,J,CJ\n";
    for (const auto& p : profiles) {
        for (std::size_t k = 0; k < p.count(); ++k) {
            out << p.asset_id << ',' << panel.dates.at(p.jpt[k]).to_string() << ','
                << fmt_g9(p.J[k]) << ',' << fmt_g9(p.CJ[k]) << '\n';
        }
    }
}

std::vector<JumpProfile> read_jump_profile_csv(const std::string& path, const Panel& panel) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing file: " + path);
    std::map<std::int64_t, std::size_t> date_index;
    for (std::size_t t = 0; t < panel.n_dates(); ++t) date_index[panel.dates[t].serial()] = t;
    std::map<std::string, std::size_t> asset_index;
    std::vector<JumpProfile> profiles(panel.n_assets());
    for (std::size_t a = 0; a < panel.n_assets(); ++a) {
        profiles[a].asset_id = panel.asset_ids[a];
        asset_index[panel.asset_ids[a]] = a;
    }
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 4) throw std::runtime_error(path + ": malformed row '" + line + "'");
        const auto ait = asset_index.find(cells[0]);
        if (ait == asset_index.end()) {
            throw std::runtime_error(path + ": unknown asset '" + cells[0] + "'");
        }
        const auto dit = date_index.find(Date::parse(cells[1]).serial());
        if (dit == date_index.end()) {
            throw std::runtime_error(path + ": jump date " + cells[1] + " not in panel");
        }
        auto& p = profiles[ait->second];
        p.jpt.push_back(dit->second);
        p.J.push_back(std::stod(cells[2]));
        p.CJ.push_back(std::stod(cells[3]));
    }
    return profiles;
}

void write_var_series_csv(const std::vector<VaRSeries>& with_jumps,
                          const std::vector<VaRSeries>& without_jumps,
                          const VaRSeries* general_levy, const std::string& path) {
    if (with_jumps.size() != without_jumps.size()) {
        throw std::invalid_argument("var series lists misaligned");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "asset,date,t,var_with_jumps,var_without_jumps";
    if (general_levy) out << ",var_general_levy";
    out << '\n';
    for (std::size_t a = 0; a < with_jumps.size(); ++a) {
        const auto& w = with_jumps[a];
        const auto& wo = without_jumps[a];
        if (w.size() != wo.size()) throw std::invalid_argument("var series misaligned");
        for (std::size_t i = 0; i < w.size(); ++i) {
            out << w.id << ',' << w.dates[i].to_string() << ',' << fmt_g9(w.horizons[i]) << ','
                << fmt_g9(w.values[i]) << ',' << fmt_g9(wo.values[i]);
            if (general_levy) out << ',';
            out << '\n';
        }
    }
    if (general_levy) {
        // Portfolio rows carry the with/without portfolio base plus the
        // jump-corrected general value.
        for (std::size_t i = 0; i < general_levy->size(); ++i) {
            out << general_levy->id << ',' << general_levy->dates[i].to_string() << ','
                << fmt_g9(general_levy->horizons[i]) << ",,," << fmt_g9(general_levy->values[i])
                << '\n';
        }
    }
}

std::vector<VaRSeries> read_var_series_csv(const std::string& path, double alpha) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty");
    std::map<std::string, std::size_t> index;
    std::vector<VaRSeries> with, without;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() < 5) throw std::runtime_error(path + ": malformed row '" + line + "'");
        if (cells[3].empty()) continue;  // portfolio/general rows are not per-asset series
        auto it = index.find(cells[0]);
        if (it == index.end()) {
            it = index.emplace(cells[0], with.size()).first;
            VaRSeries w;
            w.id = cells[0];
            w.alpha = alpha;
            w.variant = VaRVariant::WithJumps;
            with.push_back(w);
            VaRSeries wo = w;
            wo.variant = VaRVariant::WithoutJumps;
            without.push_back(wo);
        }
        const std::size_t a = it->second;
        const Date d = Date::parse(cells[1]);
        with[a].dates.push_back(d);
        with[a].horizons.push_back(std::stod(cells[2]));
        with[a].values.push_back(std::stod(cells[3]));
        without[a].dates.push_back(d);
        without[a].horizons.push_back(std::stod(cells[2]));
        without[a].values.push_back(std::stod(cells[4]));
    }
    std::vector<VaRSeries> out;
    out.reserve(with.size() * 2);
    for (auto& s : with) out.push_back(std::move(s));
    for (auto& s : without) out.push_back(std::move(s));
    return out;
}

void run_pipeline(const RunConfig& config) {
    config.validate();
    namespace fs = std::filesystem;
    fs::create_directories(config.output_dir);
    const auto artifact = [&](const std::string& name) {
        return (fs::path(config.output_dir) / name).string();
    };

    // Ingest and normalize.
    const auto loaded = load_prices(config.input_csv);
    const Panel panel = build_panel(loaded.series);
    const std::size_t n_assets = panel.n_assets();
    const auto weights = resolve_weights(config, n_assets);

    // Detect jumps and build profiles on the normalized panel.
    ChangepointConfig cp_cfg;
    cp_cfg.penalty = config.penalty;
    cp_cfg.min_segment_length = config.min_seg_len;
    std::vector<JumpProfile> profiles;
    for (std::size_t a = 0; a < n_assets; ++a) {
        const PriceSeries s = panel.series(a);
        try {
            profiles.push_back(compute_jump_profile(s, detect_jumps(s, cp_cfg)));
        } catch (const std::exception& e) {
            throw std::runtime_error("detect-jumps: asset '" + s.asset_id + "': " + e.what());
        }
    }
    write_jump_profile_csv(profiles, panel, artifact("jump_profile.csv"));

    // Remove jumps and write the adjusted panel.
    Panel adjusted = panel;
    for (std::size_t a = 0; a < n_assets; ++a) {
        try {
            adjusted.prices[a] = remove_jumps(panel.series(a), profiles[a]).prices;
        } catch (const std::exception& e) {
            throw std::runtime_error("adjust: asset '" + panel.asset_ids[a] + "': " + e.what());
        }
    }
    write_panel_csv(adjusted, artifact("adjusted_prices.csv"));

    // VaR stage reads the adjusted panel back, so cached intermediates and
    // in-memory state cannot drift apart.
    const Panel adjusted_rt = read_panel_csv(artifact("adjusted_prices.csv"));
    std::vector<VaRSeries> with_jumps, without_jumps;
    const JumpProfile empty_profile;
    for (std::size_t a = 0; a < n_assets; ++a) {
        try {
            VaRSeries w = expected_var_series(adjusted_rt.series(a), empty_profile, config.alpha,
                                              config.min_window, VaRVariant::WithoutJumps);
            w.variant = VaRVariant::WithJumps;
            with_jumps.push_back(std::move(w));
            without_jumps.push_back(expected_var_series(panel.series(a), empty_profile,
                                                        config.alpha, config.min_window,
                                                        VaRVariant::WithoutJumps));
        } catch (const std::exception& e) {
            throw std::runtime_error("var: asset '" + panel.asset_ids[a] + "': " + e.what());
        }
    }
    std::optional<VaRSeries> general;
    if (config.levy) {
        const JumpProfile empty;
        std::vector<JumpProfile> rt_profiles =
            read_jump_profile_csv(artifact("jump_profile.csv"), panel);
        general = expected_var_series_portfolio(panel, rt_profiles, weights, config.alpha,
                                                config.min_window, VaRVariant::GeneralLevy,
                                                &*config.levy);
    }
    write_var_series_csv(with_jumps, without_jumps, general ? &*general : nullptr,
                         artifact("var_series.csv"));

    // Backtest stage consumes the written var series and profiles.
    const auto rt_series = read_var_series_csv(artifact("var_series.csv"), config.alpha);
    const auto rt_profiles = read_jump_profile_csv(artifact("jump_profile.csv"), panel);
    nlohmann::json assets = nlohmann::json::array();
    std::vector<VaRSeries> rt_with(rt_series.begin(),
                                   rt_series.begin() + static_cast<std::ptrdiff_t>(n_assets));
    std::vector<VaRSeries> rt_without(rt_series.begin() + static_cast<std::ptrdiff_t>(n_assets),
                                      rt_series.end());
    std::vector<std::size_t> lengths(n_assets, panel.n_dates());
    for (std::size_t a = 0; a < n_assets; ++a) {
        try {
            const auto report = backtest_asset(panel.series(a), rt_profiles[a], rt_with[a],
                                               rt_without[a], config.alpha, config.dq_lags);
            assets.push_back({{"asset", report.asset_id},
                              {"n_obs", report.n_obs},
                              {"violations", report.violation_count},
                              {"dq_stat", round_g9(report.dq_statistic)},
                              {"dq_p", round_g9(report.dq_p_value)},
                              {"rmse", round_g9(report.rmse_with_without)},
                              {"delta", round_g9(report.delta)},
                              {"mcj", round_g9(report.mcj)}});
        } catch (const std::exception& e) {
            throw std::runtime_error("backtest: asset '" + panel.asset_ids[a] + "': " + e.what());
        }
    }
    const auto diagnostics = jump_diagnostics(rt_profiles, lengths, rt_with, rt_without);
    nlohmann::json backtest_json;
    backtest_json["alpha"] = config.alpha;
    backtest_json["dq_lags"] = config.dq_lags;
    backtest_json["assets"] = assets;
    if (std::isnan(diagnostics.rho_mcj_delta)) {
        backtest_json["rho_mcj_delta"] = nullptr;
    } else {
        backtest_json["rho_mcj_delta"] = round_g9(diagnostics.rho_mcj_delta);
    }
    {
        std::ofstream out(artifact("backtest.json"), std::ios::binary);
        out << backtest_json.dump(2) << '\n';
    }

    // Manifest: config echo plus content hashes of inputs and outputs.
    nlohmann::json manifest;
    manifest["config"] = config.to_json();
    manifest["inputs"] = {{config.input_csv, fnv1a64_file(config.input_csv)}};
    nlohmann::json outputs;
    for (const char* name :
         {"adjusted_prices.csv", "jump_profile.csv", "var_series.csv", "backtest.json"}) {
        outputs[name] = fnv1a64_file(artifact(name));
    }
    manifest["outputs"] = outputs;
    if (!loaded.warnings.empty()) manifest["ingest_warnings"] = loaded.warnings;
    {
        std::ofstream out(artifact("run_manifest.json"), std::ios::binary);
        out << manifest.dump(2) << '\n';
    }
}

nlohmann::json SyntheticSpec::to_json() const {
    nlohmann::json assets_json = nlohmann::json::array();
    for (const auto& a : assets) {
        nlohmann::json jumps = nlohmann::json::array();
        for (const auto& [day, size] : a.jumps) jumps.push_back({{"day", day}, {"size", size}});
        assets_json.push_back({{"id", a.id},
                               {"s0", a.s0},
                               {"mu", a.mu},
                               {"sigma", a.sigma},
                               {"jumps", jumps}});
    }
    return {{"days", days}, {"start_date", start_date.to_string()}, {"assets", assets_json}};
}

SyntheticSpec SyntheticSpec::from_json(const nlohmann::json& j) {
    SyntheticSpec spec;
    spec.days = j.at("days").get<std::size_t>();
    if (j.contains("start_date")) spec.start_date = Date::parse(j["start_date"]);
    for (const auto& a : j.at("assets")) {
        SyntheticAsset asset;
        asset.id = a.at("id");
        asset.s0 = a.value("s0", 100.0);
        asset.mu = a.value("mu", 0.0);
        asset.sigma = a.value("sigma", 0.01);
        if (a.contains("jumps")) {
            for (const auto& jj : a["jumps"]) {
                asset.jumps.emplace_back(jj.at("day").get<std::size_t>(),
                                         jj.at("size").get<double>());
            }
        }
        spec.assets.push_back(std::move(asset));
    }
    return spec;
}

Panel generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed,
                         std::vector<SyntheticTruth>* truth) {
    if (spec.assets.empty()) throw std::invalid_argument("synthetic spec has no assets");
    if (spec.days < 3) throw std::invalid_argument("synthetic spec needs >= 3 days");

    // Weekday calendar from the start date.
    std::vector<Date> dates;
    Date d = spec.start_date;
    while (dates.size() < spec.days) {
        if (d.weekday() < 5) dates.push_back(d);
        d = d + 1;
    }

    Panel panel;
    panel.dates = dates;
    for (std::size_t a = 0; a < spec.assets.size(); ++a) {
        const auto& asset = spec.assets[a];
        if (!(asset.s0 > 0.0) || !(asset.sigma >= 0.0)) {
            throw std::invalid_argument("asset '" + asset.id + "': invalid s0/sigma");
        }
        PathRng rng(seed, a);
        std::vector<double> prices(spec.days);
        double log_level = std::log(asset.s0);
        prices[0] = asset.s0;
        for (std::size_t t = 1; t < spec.days; ++t) {
            log_level += asset.mu - 0.5 * asset.sigma * asset.sigma +
                         asset.sigma * rng.next_normal();
            prices[t] = std::exp(log_level);
        }
        for (const auto& [day, size] : asset.jumps) {
            if (day == 0 || day >= spec.days) {
                throw std::invalid_argument("asset '" + asset.id + "': jump day " +
                                            std::to_string(day) + " out of range");
            }
            for (std::size_t t = day; t < spec.days; ++t) prices[t] += size;
            if (truth) truth->push_back({asset.id, day, dates[day], size});
        }
        for (double p : prices) {
            if (!(p > 0.0)) {
                throw std::runtime_error("asset '" + asset.id +
                                         "': injected jumps drive the price non-positive");
            }
        }
        panel.asset_ids.push_back(asset.id);
        panel.prices.push_back(std::move(prices));
    }
    return panel;
}

void write_truth_csv(const std::vector<SyntheticTruth>& truth, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "asset,jump_index,jump_date,size\n";
    for (const auto& t : truth) {
        out << t.asset_id << ',' << t.day << ',' << t.date.to_string() << ',' << fmt_g9(t.size)
            << '\n';
    }
}

}  // namespace jumpvar
