#pragma once

#include <cstddef>
#include <vector>

#include "jumpvar/series.hpp"

namespace jumpvar {

struct ChangepointConfig {
    /// Penalty per changepoint. NaN selects the default 2*ln(n) at detection time.
    double penalty = kAutoPenalty;
    std::size_t min_segment_length = 2;

    static constexpr double kAutoPenalty = -1.0;

    double resolve_penalty(std::size_t n) const;
    void validate() const;
};

/// Detected mean-changepoints. `cpt` holds the last index of each closing
/// segment (the "day before" a jump), `jpt` the first index of each new
/// segment; jpt[k] == cpt[k] + 1 always. `n` is the length of the series the
/// indices refer to.
struct JumpDays {
    std::vector<std::size_t> cpt;
    std::vector<std::size_t> jpt;
    std::size_t n = 0;

    std::size_t count() const { return jpt.size(); }
};

/// Standardizes the first differences of a price series to zero mean and unit
/// variance (n-1 denominator). Throws "degenerate series" when the differences
/// have zero variance.
std::vector<double> normalize_differences(const PriceSeries& series);

/// Exact penalized segmentation of x under the Gaussian mean-change cost with
/// unit variance, C(seg) = sum (x_i - mean(seg))^2, minimizing
/// sum_segments C + penalty * (#changepoints). PELT pruning is exact: the
/// result always equals full optimal partitioning.
JumpDays detect_changepoints(const std::vector<double>& x, const ChangepointConfig& cfg);

/// Pipeline entry point: detects changepoints on the normalized differences of
/// `series` and reports them in price coordinates (difference index i maps to
/// price index i+1, so cpt lands on the day before the jump).
JumpDays detect_jumps(const PriceSeries& series, const ChangepointConfig& cfg);

/// Binary vector of length n with 1 exactly at the jpt indices.
std::vector<int> jump_indicator(const JumpDays& jumps, std::size_t n);

/// Pearson correlation matrix of binary indicator vectors (phi coefficient).
/// A zero-variance vector gets NaN against everything else; the diagonal is 1.
std::vector<std::vector<double>> jump_correlation(const std::vector<std::vector<int>>& indicators);

}  // namespace jumpvar
