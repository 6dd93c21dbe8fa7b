#pragma once

#include <string>
#include <vector>

#include "jumpvar/estimation.hpp"
#include "jumpvar/jump_adjust.hpp"
#include "jumpvar/levy.hpp"
#include "jumpvar/series.hpp"

namespace jumpvar {

enum class VaRVariant { WithJumps, WithoutJumps, GeneralLevy };

std::string to_string(VaRVariant v);

/// Dated VaR levels as price-relative multipliers (the level the growth
/// factor S(t)/S(0) stays above with probability alpha).
struct VaRSeries {
    std::string id;
    std::vector<Date> dates;
    std::vector<double> horizons;  // trading days from series start
    std::vector<double> values;
    double alpha = 0.99;
    VaRVariant variant = VaRVariant::WithoutJumps;

    std::size_t size() const { return values.size(); }
};

/// Single-asset expected VaR level over horizon t:
/// exp((mu - sigma^2/2) t + sigma Phi^{-1}(1-alpha) sqrt(t)).
double var_single_asset(double mu, double sigma, double t, double alpha);

/// Portfolio expected VaR level without explicit jump terms:
/// exp(w^T (mu - sigma.sigma/2) t + sqrt(t (w^T Sigma w)) Phi^{-1}(1-alpha)).
/// Serves both the jump-adjusted two-step estimate and the raw-data baseline,
/// depending on which moments are supplied.
double var_portfolio_no_jump_terms(const ModelParams& params, double t, double alpha);

/// General expected VaR under the jump model: the no-jump-term base times
/// prod_k exp(t lambda_k E[prod_i (1 + c_ik z)^{w_i} - 1 - sum_i w_i c_ik z]),
/// the inner expectation taken over each component's jump law by quadrature.
double var_general(const ModelParams& params, const LevyModel& levy, double t, double alpha,
                   const QuadratureConfig& quad = {});

/// Daily expected-VaR series with expanding-window moments: at price index d
/// (d >= min_window), the horizon is t = d trading days and moments use all
/// returns through date d. With-jumps removes the profile's jumps first; the
/// baseline uses the raw series.
VaRSeries expected_var_series(const PriceSeries& prices, const JumpProfile& profile, double alpha,
                              std::size_t min_window, VaRVariant variant);

/// Portfolio version over an aligned panel; the general-Lévy variant applies
/// the jump correction factor on top of the with-jumps base.
VaRSeries expected_var_series_portfolio(const Panel& panel,
                                        const std::vector<JumpProfile>& profiles,
                                        const std::vector<double>& weights, double alpha,
                                        std::size_t min_window, VaRVariant variant,
                                        const LevyModel* levy = nullptr);

}  // namespace jumpvar
