#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jumpvar/estimation.hpp"
#include "jumpvar/levy.hpp"

namespace jumpvar {

struct SimConfig {
    std::size_t n_paths = 1;
    double horizon_days = 1.0;
    std::size_t steps_per_day = 1;  // only used when full paths are requested
    std::uint64_t seed = 0;
    ModelParams params;
    LevyModel levy;  // zero components = pure diffusion
    std::vector<double> s0;
    bool full_paths = false;

    void validate() const;
};

struct PathEnsemble {
    /// terminal[p][i] = asset i's level at the horizon on path p.
    std::vector<std::vector<double>> terminal;
    /// Grid levels, only filled when full paths are requested:
    /// paths[p][i][step], step 0 holding S0.
    std::vector<std::vector<std::vector<double>>> paths;
    std::vector<double> grid_times;
    /// jump_counts[p][k] = realized jumps of component k on path p.
    std::vector<std::vector<std::uint64_t>> jump_counts;
    std::uint64_t rejected_jump_draws = 0;
};

/// Samples the jump-diffusion terminal law exactly: Brownian terms as
/// sqrt(t) * A * Z, jump counts Poisson(lambda t) with i.i.d. sizes, and the
/// analytic drift/compensator — no time-discretization error. Full-path mode
/// composes exact per-step increments with jump times uniform on the horizon.
PathEnsemble simulate_paths(const SimConfig& cfg);

struct McFunctionalResult {
    double estimate = 0.0;
    double std_error = 0.0;
    double closed_form = 0.0;  // exp(t * lambda * E[exp(f) - 1])
};

/// Monte Carlo estimate of E[exp(integral of f against the jump measure)] for
/// a time-homogeneous f over one compound-Poisson component, plus the
/// closed-form value it should converge to.
McFunctionalResult mc_poisson_exponential_functional(const std::function<double(double)>& f,
                                                     const JumpLaw& law, double lambda, double t,
                                                     std::size_t n_paths, std::uint64_t seed);

struct CoverageResult {
    double violation_rate = 0.0;
    double std_error = 0.0;
    double expected_rate = 0.0;
};

/// Fraction of simulated paths whose portfolio level (weights applied in log
/// space) ends at or below var_value, with the binomial standard error.
CoverageResult mc_var_coverage(const SimConfig& cfg, double var_value, double alpha);

}  // namespace jumpvar
