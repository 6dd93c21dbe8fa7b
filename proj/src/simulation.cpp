#include "jumpvar/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jumpvar/rng.hpp"
#include "jumpvar/stats.hpp"

namespace jumpvar {

void SimConfig::validate() const {
    if (n_paths < 1) throw std::invalid_argument("n_paths must be >= 1");
    if (!(horizon_days > 0.0)) throw std::invalid_argument("horizon must be > 0");
    if (steps_per_day < 1) throw std::invalid_argument("steps_per_day must be >= 1");
    params.validate();
    if (s0.size() != params.n_assets()) {
        throw std::invalid_argument("s0 length does not match the number of assets");
    }
    for (double v : s0) {
        if (!(v > 0.0)) throw std::invalid_argument("initial prices must be > 0");
    }
    if (!levy.components.empty()) {
        levy.validate();
        if (levy.n_assets() != params.n_assets()) {
            throw std::invalid_argument("levy model asset count does not match params");
        }
    }
}

namespace {

struct ComponentPlan {
    double lambda;
    const JumpLaw* law;
    const std::vector<double>* loadings;
    double mean_jump;  // E[zeta] over the truncated law
};

std::vector<ComponentPlan> plan_components(const LevyModel& levy) {
    std::vector<ComponentPlan> plans;
    QuadratureConfig quad;
    for (const auto& comp : levy.components) {
        const double mean_jump = comp.law.expectation([](double z) { return z; }, quad);
        plans.push_back({comp.lambda, &comp.law, &comp.loadings, mean_jump});
    }
    return plans;
}

}  // namespace

PathEnsemble simulate_paths(const SimConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.params.n_assets();
    const double t = cfg.horizon_days;
    const auto plans = plan_components(cfg.levy);

    // Deterministic per-asset drift: (mu - sigma^2/2) t minus each component's
    // compensator t * lambda * loading * E[zeta].
    std::vector<double> drift(n);
    for (std::size_t i = 0; i < n; ++i) {
        drift[i] = (cfg.params.mu[i] - 0.5 * cfg.params.sigma[i] * cfg.params.sigma[i]) * t;
        for (const auto& plan : plans) {
            drift[i] -= t * plan.lambda * (*plan.loadings)[i] * plan.mean_jump;
        }
    }

    PathEnsemble out;
    out.terminal.assign(cfg.n_paths, std::vector<double>(n));
    out.jump_counts.assign(cfg.n_paths, std::vector<std::uint64_t>(plans.size(), 0));

    const std::size_t n_steps =
        cfg.full_paths
            ? static_cast<std::size_t>(std::llround(t * static_cast<double>(cfg.steps_per_day)))
            : 0;
    if (cfg.full_paths) {
        if (n_steps == 0) throw std::invalid_argument("full paths need at least one step");
        out.grid_times.resize(n_steps + 1);
        for (std::size_t s = 0; s <= n_steps; ++s) {
            out.grid_times[s] = t * static_cast<double>(s) / static_cast<double>(n_steps);
        }
        out.paths.assign(cfg.n_paths,
                         std::vector<std::vector<double>>(n, std::vector<double>(n_steps + 1)));
    }

    std::uint64_t rejections = 0;
    std::vector<double> z(n);
    for (std::size_t p = 0; p < cfg.n_paths; ++p) {
        PathRng rng(cfg.seed, p);

        if (!cfg.full_paths) {
            for (std::size_t j = 0; j < n; ++j) z[j] = rng.next_normal();
            std::vector<double> log_level(n);
            for (std::size_t i = 0; i < n; ++i) {
                double diffusion = 0.0;
                for (std::size_t j = 0; j <= i; ++j) diffusion += cfg.params.A(i, j) * z[j];
                log_level[i] = std::log(cfg.s0[i]) + drift[i] + std::sqrt(t) * diffusion;
            }
            for (std::size_t k = 0; k < plans.size(); ++k) {
                const auto& plan = plans[k];
                const std::uint64_t count = rng.next_poisson(plan.lambda * t);
                out.jump_counts[p][k] = count;
                for (std::uint64_t m = 0; m < count; ++m) {
                    const double zeta = rng.sample_jump(*plan.law, &rejections);
                    for (std::size_t i = 0; i < n; ++i) {
                        log_level[i] += std::log1p((*plan.loadings)[i] * zeta);
                    }
                }
            }
            for (std::size_t i = 0; i < n; ++i) out.terminal[p][i] = std::exp(log_level[i]);
            continue;
        }

        // Full-path mode: exact per-step diffusion increments plus jumps placed
        // uniformly on the horizon.
        const double dt = t / static_cast<double>(n_steps);
        std::vector<std::vector<double>> log_incr(n, std::vector<double>(n_steps, 0.0));
        for (std::size_t s = 0; s < n_steps; ++s) {
            for (std::size_t j = 0; j < n; ++j) z[j] = rng.next_normal();
            for (std::size_t i = 0; i < n; ++i) {
                double diffusion = 0.0;
                for (std::size_t j = 0; j <= i; ++j) diffusion += cfg.params.A(i, j) * z[j];
                log_incr[i][s] = drift[i] / static_cast<double>(n_steps) +
                                 std::sqrt(dt) * diffusion;
            }
        }
        for (std::size_t k = 0; k < plans.size(); ++k) {
            const auto& plan = plans[k];
            const std::uint64_t count = rng.next_poisson(plan.lambda * t);
            out.jump_counts[p][k] = count;
            for (std::uint64_t m = 0; m < count; ++m) {
                const double when = rng.next_uniform() * t;
                const double zeta = rng.sample_jump(*plan.law, &rejections);
                auto step = std::min<std::size_t>(
                    n_steps - 1, static_cast<std::size_t>(when / dt));
                for (std::size_t i = 0; i < n; ++i) {
                    log_incr[i][step] += std::log1p((*plan.loadings)[i] * zeta);
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            double level = std::log(cfg.s0[i]);
            out.paths[p][i][0] = cfg.s0[i];
            for (std::size_t s = 0; s < n_steps; ++s) {
                level += log_incr[i][s];
                out.paths[p][i][s + 1] = std::exp(level);
            }
            out.terminal[p][i] = out.paths[p][i][n_steps];
        }
    }
    out.rejected_jump_draws = rejections;
    return out;
}

McFunctionalResult mc_poisson_exponential_functional(const std::function<double(double)>& f,
                                                     const JumpLaw& law, double lambda, double t,
                                                     std::size_t n_paths, std::uint64_t seed) {
    if (!(lambda > 0.0) || !(t > 0.0)) {
        throw std::invalid_argument("lambda and t must be > 0");
    }
    if (n_paths < 2) throw std::invalid_argument("need >= 2 paths");
    law.validate();

    CompensatedSum sum, sum_sq;
    for (std::size_t p = 0; p < n_paths; ++p) {
        PathRng rng(seed, p);
        const std::uint64_t count = rng.next_poisson(lambda * t);
        double acc = 0.0;
        for (std::uint64_t m = 0; m < count; ++m) acc += f(rng.sample_jump(law));
        const double v = std::exp(acc);
        sum.add(v);
        sum_sq.add(v * v);
    }
    const double np = static_cast<double>(n_paths);
    McFunctionalResult r;
    r.estimate = sum.value() / np;
    const double var = std::max(0.0, (sum_sq.value() - np * r.estimate * r.estimate) / (np - 1.0));
    r.std_error = std::sqrt(var / np);

    QuadratureConfig quad;
    const double mean_exp_f =
        law.expectation([&](double z) { return std::exp(f(z)) - 1.0; }, quad);
    r.closed_form = std::exp(t * lambda * mean_exp_f);
    return r;
}

CoverageResult mc_var_coverage(const SimConfig& cfg, double var_value, double alpha) {
    const auto ensemble = simulate_paths(cfg);
    const std::size_t n = cfg.params.n_assets();
    std::size_t violations = 0;
    for (const auto& terminal : ensemble.terminal) {
        double log_level = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            log_level += cfg.params.weights[i] * std::log(terminal[i] / cfg.s0[i]);
        }
        if (std::exp(log_level) <= var_value) ++violations;
    }
    CoverageResult r;
    const double np = static_cast<double>(cfg.n_paths);
    r.violation_rate = static_cast<double>(violations) / np;
    r.std_error = std::sqrt(r.violation_rate * (1.0 - r.violation_rate) / np);
    r.expected_rate = 1.0 - alpha;
    return r;
}

}  // namespace jumpvar
