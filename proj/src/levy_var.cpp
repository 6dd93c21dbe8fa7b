#include "jumpvar/levy_var.hpp"

#include <cmath>
#include <stdexcept>

#include "jumpvar/market_data.hpp"
#include "jumpvar/stats.hpp"

namespace jumpvar {

std::string to_string(VaRVariant v) {
    switch (v) {
        case VaRVariant::WithJumps: return "with-jumps";
        case VaRVariant::WithoutJumps: return "without-jumps";
        case VaRVariant::GeneralLevy: return "general-levy";
    }
    return "unknown";
}

double var_single_asset(double mu, double sigma, double t, double alpha) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("var_single_asset: sigma must be >= 0");
    if (!(t > 0.0)) throw std::invalid_argument("var_single_asset: t must be > 0");
    const double q = normal_quantile(1.0 - alpha);
    return std::exp((mu - 0.5 * sigma * sigma) * t + sigma * q * std::sqrt(t));
}

double var_portfolio_no_jump_terms(const ModelParams& params, double t, double alpha) {
    if (!(t > 0.0)) throw std::invalid_argument("var_portfolio: t must be > 0");
    const std::size_t n = params.n_assets();
    double drift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        drift += params.weights[i] * (params.mu[i] - 0.5 * params.sigma[i] * params.sigma[i]);
    }
    const double wSw = quadratic_form(params.weights, params.Sigma);
    if (wSw < 0.0) {
        throw std::runtime_error("var_portfolio: w^T Sigma w is negative (" +
                                 std::to_string(wSw) + ")");
    }
    const double q = normal_quantile(1.0 - alpha);
    return std::exp(drift * t + std::sqrt(t * wSw) * q);
}

namespace {

/// Per-component exponent contribution of the jump correction, divided by t:
/// lambda * E[exp(sum_i w_i ln(1 + c_i z)) - 1 - sum_i w_i c_i z].
double component_correction_rate(const JumpComponent& comp, const std::vector<double>& weights,
                                 const QuadratureConfig& quad) {
    auto integrand = [&](double z) {
        double log_prod = 0.0;
        double linear = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            const double arg = comp.loadings[i] * z;
            if (!(1.0 + arg > 0.0)) {
                throw std::runtime_error("jump support violates 1 + loading * zeta > 0 at zeta=" +
                                         std::to_string(z));
            }
            log_prod += weights[i] * std::log1p(arg);
            linear += weights[i] * arg;
        }
        return std::exp(log_prod) - 1.0 - linear;
    };
    return comp.lambda * comp.law.expectation(integrand, quad);
}

}  // namespace

double var_general(const ModelParams& params, const LevyModel& levy, double t, double alpha,
                   const QuadratureConfig& quad) {
    levy.validate();
    if (levy.n_assets() != params.n_assets()) {
        throw std::invalid_argument("levy model asset count does not match params");
    }
    const double base = var_portfolio_no_jump_terms(params, t, alpha);
    double exponent_rate = 0.0;
    for (const auto& comp : levy.components) {
        exponent_rate += component_correction_rate(comp, params.weights, quad);
    }
    return base * std::exp(t * exponent_rate);
}

namespace {

/// Expanding mean / sample std of log returns, evaluated at each horizon via
/// prefix sums.
struct ExpandingMoments {
    std::vector<double> csum, csum2;

    explicit ExpandingMoments(const std::vector<double>& returns) {
        csum.assign(returns.size() + 1, 0.0);
        csum2.assign(returns.size() + 1, 0.0);
        for (std::size_t i = 0; i < returns.size(); ++i) {
            csum[i + 1] = csum[i] + returns[i];
            csum2[i + 1] = csum2[i] + returns[i] * returns[i];
        }
    }

    // Moments over the first m returns.
    void at(std::size_t m, double& mu, double& sigma) const {
        mu = csum[m] / static_cast<double>(m);
        const double ss = csum2[m] - static_cast<double>(m) * mu * mu;
        sigma = std::sqrt(std::max(0.0, ss / static_cast<double>(m - 1)));
    }
};

}  // namespace

VaRSeries expected_var_series(const PriceSeries& prices, const JumpProfile& profile, double alpha,
                              std::size_t min_window, VaRVariant variant) {
    if (variant == VaRVariant::GeneralLevy) {
        throw std::invalid_argument("general-levy variant requires the portfolio interface");
    }
    if (min_window < 2) throw std::invalid_argument("min_window must be >= 2");
    if (prices.size() <= min_window) {
        throw std::runtime_error("series '" + prices.asset_id + "': only " +
                                 std::to_string(prices.size()) +
                                 " observations, need more than min_window=" +
                                 std::to_string(min_window));
    }
    const PriceSeries basis =
        (variant == VaRVariant::WithJumps) ? remove_jumps(prices, profile) : prices;
    const auto rets = log_returns(basis);
    const ExpandingMoments mom(rets.returns);

    VaRSeries out;
    out.id = prices.asset_id;
    out.alpha = alpha;
    out.variant = variant;
    for (std::size_t d = min_window; d < prices.size(); ++d) {
        double mu, sigma;
        mom.at(d, mu, sigma);  // the first d returns run through date index d
        const double t = static_cast<double>(d);
        out.dates.push_back(prices.dates[d]);
        out.horizons.push_back(t);
        out.values.push_back(var_single_asset(mu, sigma, t, alpha));
    }
    return out;
}

VaRSeries expected_var_series_portfolio(const Panel& panel,
                                        const std::vector<JumpProfile>& profiles,
                                        const std::vector<double>& weights, double alpha,
                                        std::size_t min_window, VaRVariant variant,
                                        const LevyModel* levy) {
    const std::size_t n = panel.n_assets();
    if (weights.size() != n) throw std::invalid_argument("weights length mismatch");
    if (variant == VaRVariant::GeneralLevy && levy == nullptr) {
        throw std::invalid_argument("general-levy variant requires a levy model");
    }
    if (panel.n_dates() <= min_window) {
        throw std::runtime_error("panel has too few dates for min_window=" +
                                 std::to_string(min_window));
    }

    const bool adjusted = (variant != VaRVariant::WithoutJumps);
    std::vector<std::vector<double>> rets(n);
    for (std::size_t a = 0; a < n; ++a) {
        PriceSeries s = panel.series(a);
        if (adjusted) {
            if (profiles.size() != n) throw std::invalid_argument("profiles length mismatch");
            s = remove_jumps(s, profiles[a]);
        }
        rets[a] = log_returns(s).returns;
    }

    // Jump correction exponent is linear in t for time-homogeneous loadings,
    // so the per-day rate is computed once.
    double correction_rate = 0.0;
    if (variant == VaRVariant::GeneralLevy) {
        levy->validate();
        if (levy->n_assets() != n) throw std::invalid_argument("levy model asset count mismatch");
        QuadratureConfig quad;
        for (const auto& comp : levy->components) {
            correction_rate += component_correction_rate(comp, weights, quad);
        }
    }

    std::vector<ExpandingMoments> moms;
    moms.reserve(n);
    for (std::size_t a = 0; a < n; ++a) moms.emplace_back(rets[a]);

    VaRSeries out;
    out.id = "PORTFOLIO";
    out.alpha = alpha;
    out.variant = variant;
    const double q = normal_quantile(1.0 - alpha);
    for (std::size_t d = min_window; d < panel.n_dates(); ++d) {
        const double t = static_cast<double>(d);
        const std::size_t m = d;
        double drift = 0.0;
        std::vector<double> mu(n), sigma(n);
        for (std::size_t a = 0; a < n; ++a) {
            moms[a].at(m, mu[a], sigma[a]);
            drift += weights[a] * (mu[a] - 0.5 * sigma[a] * sigma[a]);
        }
        double wSw = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                double cov = 0.0;
                if (a == b) {
                    cov = sigma[a] * sigma[a];
                } else {
                    double s = 0.0;
                    for (std::size_t i = 0; i < m; ++i) {
                        s += (rets[a][i] - mu[a]) * (rets[b][i] - mu[b]);
                    }
                    cov = s / static_cast<double>(m - 1);
                }
                wSw += weights[a] * weights[b] * cov;
            }
        }
        double value = std::exp(drift * t + std::sqrt(std::max(0.0, t * wSw)) * q);
        if (variant == VaRVariant::GeneralLevy) value *= std::exp(t * correction_rate);
        out.dates.push_back(panel.dates[d]);
        out.horizons.push_back(t);
        out.values.push_back(value);
    }
    return out;
}

}  // namespace jumpvar
