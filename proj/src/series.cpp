#include "jumpvar/series.hpp"

#include <stdexcept>

namespace jumpvar {

void PriceSeries::validate() const {
    if (dates.size() != prices.size()) {
        throw std::runtime_error("series '" + asset_id + "': dates/prices length mismatch");
    }
    for (size_t i = 0; i < prices.size(); ++i) {
        if (!(prices[i] > 0.0)) {
            throw std::runtime_error("series '" + asset_id + "': non-positive price " +
                                     std::to_string(prices[i]) + " at " + dates[i].to_string());
        }
        if (i > 0 && !(dates[i - 1] < dates[i])) {
            throw std::runtime_error("series '" + asset_id + "': dates not strictly increasing at " +
                                     dates[i].to_string());
        }
    }
}

PriceSeries Panel::series(size_t asset) const {
    PriceSeries s;
    s.asset_id = asset_ids.at(asset);
    s.dates = dates;
    s.prices = prices.at(asset);
    return s;
}

}  // namespace jumpvar
