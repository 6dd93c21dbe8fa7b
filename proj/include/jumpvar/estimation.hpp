#pragma once

#include <string>
#include <vector>

#include "jumpvar/linalg.hpp"
#include "jumpvar/series.hpp"

namespace jumpvar {

/// Per-day return moments for a set of assets: means, standard deviations,
/// covariance with its lower-triangular Cholesky factor, and portfolio weights.
struct ModelParams {
    std::vector<std::string> asset_ids;
    std::vector<double> mu;       // mean log return per day
    std::vector<double> sigma;    // return std per sqrt(day)
    Matrix Sigma;                 // covariance per day
    Matrix A;                     // lower-triangular, A * A^T = Sigma
    std::vector<double> weights;  // sums to 1

    std::size_t n_assets() const { return mu.size(); }
    void validate() const;
};

/// Sample moments over aligned return series (n-1 denominator). Throws when
/// the sample covariance is not positive definite (e.g. collinear assets) or
/// the weights do not sum to 1.
ModelParams estimate_params(const std::vector<ReturnSeries>& panel,
                            const std::vector<double>& weights);

}  // namespace jumpvar
