#include "jumpvar/backtest.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "jumpvar/linalg.hpp"
#include "jumpvar/stats.hpp"

namespace jumpvar {

DqResult dq_test(const std::vector<double>& realized, const std::vector<double>& var_levels,
                 double alpha, std::size_t lags) {
    if (realized.size() != var_levels.size()) {
        throw std::invalid_argument("dq_test: realized and VaR series misaligned");
    }
    if (lags < 1) throw std::invalid_argument("dq_test: lags must be >= 1");
    const std::size_t n = realized.size();
    if (n <= lags + 2) throw std::invalid_argument("dq_test: series too short for the lag count");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("dq_test: alpha in (0,1)");

    const double theta = 1.0 - alpha;
    std::vector<double> hit(n);
    std::size_t violations = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const bool viol = realized[t] < var_levels[t];
        violations += viol;
        hit[t] = (viol ? 1.0 : 0.0) - theta;
    }

    const std::size_t q = lags + 2;  // intercept + lagged hits + VaR level
    const std::size_t rows = n - lags;
    Matrix xtx(q, q);
    std::vector<double> xty(q, 0.0);
    std::vector<double> row(q);
    for (std::size_t t = lags; t < n; ++t) {
        row[0] = 1.0;
        for (std::size_t l = 1; l <= lags; ++l) row[l] = hit[t - l];
        row[q - 1] = var_levels[t];
        for (std::size_t i = 0; i < q; ++i) {
            xty[i] += row[i] * hit[t];
            for (std::size_t j = i; j < q; ++j) xtx(i, j) += row[i] * row[j];
        }
    }
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < i; ++j) xtx(i, j) = xtx(j, i);

    std::vector<double> beta;
    try {
        beta = solve_spd(xtx, xty);
    } catch (const std::runtime_error&) {
        throw std::runtime_error("dq_test: singular regressor matrix (X^T X not invertible)");
    }

    DqResult r;
    r.lags = lags;
    r.n_obs = rows;
    r.violations = violations;
    r.statistic = dot(beta, xty) / (alpha * theta);
    r.p_value = chi_square_upper_tail(r.statistic, q);
    return r;
}

double rmse(const VaRSeries& a, const VaRSeries& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rmse: series lengths differ");
    if (a.size() == 0) throw std::invalid_argument("rmse: empty series");
    CompensatedSum s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.dates[i] != b.dates[i]) {
            throw std::invalid_argument("rmse: series dates misaligned at index " +
                                        std::to_string(i));
        }
        const double d = a.values[i] - b.values[i];
        s.add(d * d);
    }
    return std::sqrt(s.value() / static_cast<double>(a.size()));
}

double mean_cumulative_jump(const JumpProfile& profile, std::size_t n_dates) {
    if (n_dates == 0) throw std::invalid_argument("mean_cumulative_jump: empty series");
    if (profile.count() == 0) return 0.0;
    CompensatedSum s;
    std::size_t k = 0;
    double in_force = 0.0;
    for (std::size_t d = 0; d < n_dates; ++d) {
        while (k < profile.count() && profile.jpt[k] <= d) in_force = profile.CJ[k++];
        s.add(in_force);
    }
    return s.value() / static_cast<double>(n_dates);
}

JumpDiagnostics jump_diagnostics(const std::vector<JumpProfile>& profiles,
                                 const std::vector<std::size_t>& series_lengths,
                                 const std::vector<VaRSeries>& var_with,
                                 const std::vector<VaRSeries>& var_without) {
    const std::size_t n = profiles.size();
    if (series_lengths.size() != n || var_with.size() != n || var_without.size() != n) {
        throw std::invalid_argument("jump_diagnostics: input lists misaligned");
    }
    JumpDiagnostics out;
    std::vector<double> mcjs, deltas;
    for (std::size_t a = 0; a < n; ++a) {
        if (var_with[a].size() != var_without[a].size() || var_with[a].size() == 0) {
            throw std::invalid_argument("jump_diagnostics: VaR series misaligned for asset " +
                                        profiles[a].asset_id);
        }
        AssetDiagnostics d;
        d.asset_id = profiles[a].asset_id;
        d.mcj = mean_cumulative_jump(profiles[a], series_lengths[a]);
        d.delta = mean(var_with[a].values) - mean(var_without[a].values);
        mcjs.push_back(d.mcj);
        deltas.push_back(d.delta);
        out.per_asset.push_back(d);
    }
    out.rho_mcj_delta =
        (n >= 2) ? pearson(mcjs, deltas) : std::numeric_limits<double>::quiet_NaN();
    return out;
}

std::vector<double> realized_levels(const PriceSeries& prices, const VaRSeries& series) {
    if (prices.size() == 0) throw std::invalid_argument("realized_levels: empty prices");
    std::vector<double> out;
    out.reserve(series.size());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        while (idx < prices.size() && prices.dates[idx] < series.dates[i]) ++idx;
        if (idx == prices.size() || prices.dates[idx] != series.dates[i]) {
            throw std::invalid_argument("realized_levels: VaR date " +
                                        series.dates[i].to_string() + " missing from prices");
        }
        out.push_back(prices.prices[idx] / prices.prices[0]);
    }
    return out;
}

BacktestReport backtest_asset(const PriceSeries& prices, const JumpProfile& profile,
                              const VaRSeries& with_jumps, const VaRSeries& without_jumps,
                              double alpha, std::size_t lags) {
    BacktestReport report;
    report.asset_id = prices.asset_id;
    report.dq_lags = lags;

    const auto realized = realized_levels(prices, with_jumps);
    const auto dq = dq_test(realized, with_jumps.values, alpha, lags);
    report.n_obs = with_jumps.size();
    report.violation_count = dq.violations;
    report.dq_statistic = dq.statistic;
    report.dq_p_value = dq.p_value;
    report.rmse_with_without = rmse(with_jumps, without_jumps);
    report.delta = mean(with_jumps.values) - mean(without_jumps.values);
    report.mcj = mean_cumulative_jump(profile, prices.size());
    return report;
}

}  // namespace jumpvar
