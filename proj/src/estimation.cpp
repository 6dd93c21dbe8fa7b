#include "jumpvar/estimation.hpp"

#include <cmath>
#include <stdexcept>

#include "jumpvar/stats.hpp"

namespace jumpvar {

void ModelParams::validate() const {
    const std::size_t n = mu.size();
    if (sigma.size() != n || weights.size() != n || Sigma.rows() != n || Sigma.cols() != n ||
        A.rows() != n || A.cols() != n) {
        throw std::runtime_error("ModelParams: inconsistent dimensions");
    }
    double wsum = 0.0;
    for (double w : weights) wsum += w;
    if (std::abs(wsum - 1.0) > 1e-12) {
        throw std::runtime_error("ModelParams: weights sum to " + std::to_string(wsum) +
                                 ", expected 1");
    }
    const double scale = std::max(1e-300, Sigma.max_abs());
    for (std::size_t i = 0; i < n; ++i) {
        double recon = 0.0;
        double row_sq = 0.0;
        for (std::size_t j = 0; j < n; ++j) row_sq += A(i, j) * A(i, j);
        for (std::size_t j = 0; j < n; ++j) {
            recon = 0.0;
            for (std::size_t k = 0; k < n; ++k) recon += A(i, k) * A(j, k);
            if (std::abs(recon - Sigma(i, j)) > 1e-10 * scale) {
                throw std::runtime_error("ModelParams: A*A^T does not reconstruct Sigma");
            }
        }
        if (std::abs(row_sq - sigma[i] * sigma[i]) > 1e-10 * scale) {
            throw std::runtime_error("ModelParams: row sums of A^2 do not match sigma^2");
        }
    }
}

ModelParams estimate_params(const std::vector<ReturnSeries>& panel,
                            const std::vector<double>& weights) {
    if (panel.empty()) throw std::invalid_argument("estimate_params: empty panel");
    const std::size_t n = panel.size();
    const std::size_t m = panel[0].size();
    if (m < 2) throw std::invalid_argument("estimate_params: need >= 2 return observations");
    for (const auto& s : panel) {
        if (s.size() != m) throw std::invalid_argument("estimate_params: series lengths differ");
    }
    if (weights.size() != n) throw std::invalid_argument("estimate_params: weights length mismatch");
    double wsum = 0.0;
    for (double w : weights) wsum += w;
    if (std::abs(wsum - 1.0) > 1e-12) {
        throw std::invalid_argument("estimate_params: weights must sum to 1");
    }

    ModelParams params;
    params.weights = weights;
    params.mu.resize(n);
    params.sigma.resize(n);
    params.Sigma = Matrix(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        params.asset_ids.push_back(panel[a].asset_id);
        params.mu[a] = mean(panel[a].returns);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            double cov = 0.0;
            for (std::size_t t = 0; t < m; ++t) {
                cov += (panel[a].returns[t] - params.mu[a]) * (panel[b].returns[t] - params.mu[b]);
            }
            cov /= static_cast<double>(m - 1);
            params.Sigma(a, b) = cov;
            params.Sigma(b, a) = cov;
        }
        params.sigma[a] = std::sqrt(params.Sigma(a, a));
    }
    params.A = cholesky_decompose(params.Sigma);
    return params;
}

}  // namespace jumpvar
