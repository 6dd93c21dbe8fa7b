#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jumpvar/jump_adjust.hpp"
#include "jumpvar/levy_var.hpp"

namespace jumpvar {

struct DqResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::size_t lags = 0;
    std::size_t n_obs = 0;
    std::size_t violations = 0;
};

/// Dynamic Quantile regression test. hit_t = 1{realized_t < VaR_t} - (1-alpha)
/// is regressed on [1, hit_{t-1..t-L}, VaR_t]; the statistic
/// beta^T X^T X beta / (alpha (1-alpha)) is chi-square with L+2 degrees of
/// freedom under correct specification. Throws on singular X^T X.
DqResult dq_test(const std::vector<double>& realized, const std::vector<double>& var_levels,
                 double alpha, std::size_t lags = 4);

/// Root-mean-square difference between two aligned VaR series.
double rmse(const VaRSeries& a, const VaRSeries& b);

struct AssetDiagnostics {
    std::string asset_id;
    double mcj = 0.0;    // mean in-force cumulative jump size (price units)
    double delta = 0.0;  // mean(VaR with jumps) - mean(VaR without jumps)
};

struct JumpDiagnostics {
    std::vector<AssetDiagnostics> per_asset;
    double rho_mcj_delta = 0.0;  // NaN when undefined (single asset / zero variance)
};

/// The in-force cumulative jump size at each date (CJ of the most recent jump
/// at or before it, 0 before the first jump), averaged over the series.
double mean_cumulative_jump(const JumpProfile& profile, std::size_t n_dates);

/// Per-asset MCJ and Delta plus the cross-asset Pearson correlation between
/// them. Series lengths give the MCJ evaluation window; the VaR pairs must be
/// aligned per asset.
JumpDiagnostics jump_diagnostics(const std::vector<JumpProfile>& profiles,
                                 const std::vector<std::size_t>& series_lengths,
                                 const std::vector<VaRSeries>& var_with,
                                 const std::vector<VaRSeries>& var_without);

struct BacktestReport {
    std::string asset_id;
    std::size_t n_obs = 0;
    std::size_t violation_count = 0;
    double dq_statistic = 0.0;
    double dq_p_value = 1.0;
    std::size_t dq_lags = 4;
    double rmse_with_without = 0.0;
    double delta = 0.0;
    double mcj = 0.0;
};

/// Full per-asset evaluation: violations of the with-jumps VaR by the realized
/// growth factor S(t)/S(0), the DQ test over them, and the with/without
/// comparison metrics.
BacktestReport backtest_asset(const PriceSeries& prices, const JumpProfile& profile,
                              const VaRSeries& with_jumps, const VaRSeries& without_jumps,
                              double alpha, std::size_t lags = 4);

/// Realized growth factors S(d)/S(0) matched to the VaR series dates.
std::vector<double> realized_levels(const PriceSeries& prices, const VaRSeries& series);

}  // namespace jumpvar
