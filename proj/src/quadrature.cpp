#include "jumpvar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace jumpvar {

namespace {

GaussLegendreRule compute_rule(std::size_t n) {
    // Newton iteration on Legendre polynomials; nodes are symmetric so only
    // half are solved for.
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Chebyshev-like initial guess.
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(std::size_t order) {
    if (order == 0) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<std::size_t, GaussLegendreRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    std::size_t order) {
    const auto& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double halfw = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + halfw * rule.nodes[i]);
    }
    return halfw * sum;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureConfig& cfg, const std::vector<double>& breaks) {
    if (!(a <= b)) throw std::invalid_argument("integrate_adaptive: empty interval");
    std::vector<double> pts = {a};
    for (double p : breaks) {
        if (p > a && p < b) pts.push_back(p);
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    auto eval = [&](std::size_t order) {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            total += integrate_gl(f, pts[i], pts[i + 1], order);
        }
        return total;
    };

    std::size_t order = cfg.min_nodes;
    double prev = eval(order);
    for (std::size_t r = 0; r < cfg.max_refinements; ++r) {
        order *= 2;
        const double next = eval(order);
        // Relative agreement, with an absolute floor so integrals that are
        // identically zero converge instead of dividing by noise.
        const double diff = std::abs(next - prev);
        if (diff <= cfg.rel_tol * std::abs(next) + 1e-14) return next;
        prev = next;
    }
    throw std::runtime_error("quadrature did not converge to relative tolerance " +
                             std::to_string(cfg.rel_tol));
}

}  // namespace jumpvar
