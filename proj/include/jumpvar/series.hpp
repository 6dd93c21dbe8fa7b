#pragma once

#include <string>
#include <vector>

#include "jumpvar/date.hpp"

namespace jumpvar {

/// Dated strictly-positive closing prices for one asset.
struct PriceSeries {
    std::string asset_id;
    std::vector<Date> dates;
    std::vector<double> prices;

    size_t size() const { return prices.size(); }

    /// Throws std::runtime_error if prices are non-positive, sizes disagree,
    /// or dates are not strictly increasing.
    void validate() const;
};

/// Per-day log returns; dates are the later endpoint of each return,
/// so the series is one element shorter than its source prices.
struct ReturnSeries {
    std::string asset_id;
    std::vector<Date> dates;
    std::vector<double> returns;

    size_t size() const { return returns.size(); }
};

/// Gap-free multi-asset price panel on a shared calendar.
struct Panel {
    std::vector<Date> dates;
    std::vector<std::string> asset_ids;
    std::vector<std::vector<double>> prices;  // prices[a][t], one row per asset

    size_t n_assets() const { return asset_ids.size(); }
    size_t n_dates() const { return dates.size(); }

    PriceSeries series(size_t asset) const;
};

}  // namespace jumpvar
