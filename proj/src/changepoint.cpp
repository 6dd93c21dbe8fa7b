#include "jumpvar/changepoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace jumpvar {

double ChangepointConfig::resolve_penalty(std::size_t n) const {
    if (penalty == kAutoPenalty) return 2.0 * std::log(static_cast<double>(n));
    return penalty;
}

void ChangepointConfig::validate() const {
    if (penalty != kAutoPenalty && !(penalty >= 0.0)) {
        throw std::invalid_argument("changepoint penalty must be >= 0");
    }
    if (min_segment_length < 1) {
        throw std::invalid_argument("min_segment_length must be >= 1");
    }
}

std::vector<double> normalize_differences(const PriceSeries& series) {
    if (series.size() < 3) {
        throw std::runtime_error("series '" + series.asset_id + "': need >= 3 points");
    }
    const std::size_t m = series.size() - 1;
    std::vector<double> d(m);
    for (std::size_t i = 0; i < m; ++i) d[i] = series.prices[i + 1] - series.prices[i];

    double mean = 0.0;
    for (double v : d) mean += v;
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (double v : d) ss += (v - mean) * (v - mean);
    const double var = ss / static_cast<double>(m - 1);
    if (!(var > 0.0)) {
        throw std::runtime_error("degenerate series '" + series.asset_id +
                                 "': differences have zero variance");
    }
    const double sd = std::sqrt(var);
    for (double& v : d) v = (v - mean) / sd;
    return d;
}

namespace {

// Segment cost over x[a..b-1] from prefix sums: sum of squared deviations
// from the segment mean (Gaussian mean-change, variance frozen at 1).
struct SegCost {
    std::vector<double> ps, ps2;

    explicit SegCost(const std::vector<double>& x) {
        ps.assign(x.size() + 1, 0.0);
        ps2.assign(x.size() + 1, 0.0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            ps[i + 1] = ps[i] + x[i];
            ps2[i + 1] = ps2[i] + x[i] * x[i];
        }
    }

    double operator()(std::size_t a, std::size_t b) const {
        const double s = ps[b] - ps[a];
        const double len = static_cast<double>(b - a);
        return ps2[b] - ps2[a] - s * s / len;
    }
};

}  // namespace

JumpDays detect_changepoints(const std::vector<double>& x, const ChangepointConfig& cfg) {
    cfg.validate();
    const std::size_t n = x.size();
    const std::size_t L = cfg.min_segment_length;
    if (n < 2 * L) {
        throw std::runtime_error("series too short: " + std::to_string(n) +
                                 " < 2 * min_segment_length (" + std::to_string(2 * L) + ")");
    }
    const double beta = cfg.resolve_penalty(n);
    const SegCost cost(x);
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> F(n + 1, inf);
    std::vector<std::size_t> last(n + 1, 0);
    F[0] = -beta;

    // Candidate last-changepoint positions, with delayed removal: a candidate
    // dominated at time t may still be needed while the dominating position t
    // cannot yet close a segment of min length, so it is only dropped once
    // t + L is reached. This keeps the pruning exact under the min-length
    // constraint (the plain PELT rule is only valid without it).
    constexpr std::size_t kAlive = static_cast<std::size_t>(-1);
    struct Cand {
        std::size_t pos;
        std::size_t dead_at;  // removal time; kAlive while alive
    };
    std::vector<Cand> cands;
    cands.push_back({0, kAlive});

    for (std::size_t t = L; t <= n; ++t) {
        // Drop candidates whose delayed removal time has passed.
        cands.erase(std::remove_if(cands.begin(), cands.end(),
                                   [t](const Cand& c) {
                                       return c.dead_at != kAlive && t >= c.dead_at;
                                   }),
                    cands.end());

        double best = inf;
        std::size_t best_s = 0;
        for (const Cand& c : cands) {
            if (t - c.pos < L) continue;
            const double v = F[c.pos] + cost(c.pos, t) + beta;
            if (v < best) {
                best = v;
                best_s = c.pos;
            }
        }
        if (best < inf) {
            F[t] = best;
            last[t] = best_s;
            for (Cand& c : cands) {
                if (c.dead_at == kAlive && t - c.pos >= L &&
                    F[c.pos] + cost(c.pos, t) > F[t]) {
                    c.dead_at = t + L;
                }
            }
        }
        if (t < n) cands.push_back({t, kAlive});
    }

    JumpDays out;
    out.n = n;
    std::size_t cur = n;
    std::vector<std::size_t> bounds;
    while (cur > 0) {
        const std::size_t prev = last[cur];
        if (prev == 0) break;
        bounds.push_back(prev);  // first index of the segment that starts at prev
        cur = prev;
    }
    std::sort(bounds.begin(), bounds.end());
    for (std::size_t b : bounds) {
        out.cpt.push_back(b - 1);
        out.jpt.push_back(b);
    }
    return out;
}

JumpDays detect_jumps(const PriceSeries& series, const ChangepointConfig& cfg) {
    const auto z = normalize_differences(series);
    JumpDays diffs = detect_changepoints(z, cfg);
    JumpDays out;
    out.n = series.size();
    for (std::size_t k = 0; k < diffs.count(); ++k) {
        out.cpt.push_back(diffs.cpt[k] + 1);
        out.jpt.push_back(diffs.jpt[k] + 1);
    }
    return out;
}

std::vector<int> jump_indicator(const JumpDays& jumps, std::size_t n) {
    for (std::size_t j : jumps.jpt) {
        if (j >= n) throw std::invalid_argument("jump index " + std::to_string(j) +
                                                " out of range for n=" + std::to_string(n));
    }
    std::vector<int> out(n, 0);
    for (std::size_t j : jumps.jpt) out[j] = 1;
    return out;
}

std::vector<std::vector<double>> jump_correlation(const std::vector<std::vector<int>>& indicators) {
    const std::size_t k = indicators.size();
    if (k == 0) return {};
    const std::size_t n = indicators[0].size();
    if (n < 2) throw std::invalid_argument("indicator vectors must have length >= 2");
    for (const auto& v : indicators) {
        if (v.size() != n) throw std::invalid_argument("indicator vectors differ in length");
    }

    std::vector<double> mean(k), sd(k);
    for (std::size_t a = 0; a < k; ++a) {
        double m = 0.0;
        for (int v : indicators[a]) m += v;
        m /= static_cast<double>(n);
        double ss = 0.0;
        for (int v : indicators[a]) ss += (v - m) * (v - m);
        mean[a] = m;
        sd[a] = std::sqrt(ss / static_cast<double>(n - 1));
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<double>> rho(k, std::vector<double>(k, 0.0));
    for (std::size_t a = 0; a < k; ++a) {
        rho[a][a] = 1.0;
        for (std::size_t b = a + 1; b < k; ++b) {
            if (sd[a] == 0.0 || sd[b] == 0.0) {
                rho[a][b] = rho[b][a] = nan;  // mirrors N.A. reporting for constant vectors
                continue;
            }
            double cov = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                cov += (indicators[a][i] - mean[a]) * (indicators[b][i] - mean[b]);
            }
            cov /= static_cast<double>(n - 1);
            rho[a][b] = rho[b][a] = cov / (sd[a] * sd[b]);
        }
    }
    return rho;
}

}  // namespace jumpvar
