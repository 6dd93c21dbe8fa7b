#pragma once

#include <string>
#include <vector>

#include "jumpvar/changepoint.hpp"
#include "jumpvar/series.hpp"

namespace jumpvar {

/// Detected jump days with per-jump sizes J and running cumulative sizes CJ,
/// both in price units.
struct JumpProfile {
    std::string asset_id;
    std::vector<std::size_t> jpt;
    std::vector<double> J;
    std::vector<double> CJ;

    std::size_t count() const { return jpt.size(); }
};

/// J[k] = S(jpt_k) - S(jpt_k - 1); CJ[k] = sum of J[0..k].
JumpProfile compute_jump_profile(const PriceSeries& series, const JumpDays& jumps);

/// Subtracts the in-force cumulative jump size from every price at or after
/// each jump day: price'(t) = price(t) - CJ_k for t in [jpt_k, jpt_{k+1}).
/// Throws if any adjusted price would be non-positive, listing the dates.
PriceSeries remove_jumps(const PriceSeries& series, const JumpProfile& profile);

/// Exact inverse of remove_jumps.
PriceSeries reapply_jumps(const PriceSeries& adjusted, const JumpProfile& profile);

}  // namespace jumpvar
