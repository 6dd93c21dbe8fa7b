#include "jumpvar/jump_adjust.hpp"

#include <stdexcept>

namespace jumpvar {

JumpProfile compute_jump_profile(const PriceSeries& series, const JumpDays& jumps) {
    JumpProfile profile;
    profile.asset_id = series.asset_id;
    double running = 0.0;
    for (std::size_t k = 0; k < jumps.count(); ++k) {
        const std::size_t j = jumps.jpt[k];
        if (j < 1 || j >= series.size()) {
            throw std::invalid_argument("jump index " + std::to_string(j) +
                                        " has no predecessor in series of length " +
                                        std::to_string(series.size()));
        }
        const double size = series.prices[j] - series.prices[j - 1];
        running += size;
        profile.jpt.push_back(j);
        profile.J.push_back(size);
        profile.CJ.push_back(running);
    }
    return profile;
}

namespace {

PriceSeries shift_segments(const PriceSeries& series, const JumpProfile& profile, double sign,
                           bool check_positive) {
    for (std::size_t k = 0; k < profile.count(); ++k) {
        if (profile.jpt[k] < 1 || profile.jpt[k] >= series.size() ||
            (k > 0 && profile.jpt[k] <= profile.jpt[k - 1])) {
            throw std::invalid_argument("jump profile inconsistent with series '" +
                                        series.asset_id + "'");
        }
    }
    PriceSeries out = series;
    std::string offenders;
    for (std::size_t k = 0; k < profile.count(); ++k) {
        const std::size_t lo = profile.jpt[k];
        const std::size_t hi = (k + 1 < profile.count()) ? profile.jpt[k + 1] : series.size();
        const double shift = sign * profile.CJ[k];
        for (std::size_t t = lo; t < hi; ++t) {
            out.prices[t] = series.prices[t] + shift;
            if (check_positive && !(out.prices[t] > 0.0)) {
                if (!offenders.empty()) offenders += ", ";
                offenders += series.dates[t].to_string();
            }
        }
    }
    if (!offenders.empty()) {
        throw std::runtime_error("jump removal drives series '" + series.asset_id +
                                 "' non-positive at: " + offenders);
    }
    return out;
}

}  // namespace

PriceSeries remove_jumps(const PriceSeries& series, const JumpProfile& profile) {
    return shift_segments(series, profile, -1.0, true);
}

PriceSeries reapply_jumps(const PriceSeries& adjusted, const JumpProfile& profile) {
    return shift_segments(adjusted, profile, +1.0, false);
}

}  // namespace jumpvar
