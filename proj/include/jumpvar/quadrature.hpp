#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace jumpvar {

/// Gauss-Legendre nodes and weights on [-1, 1]; cached per order.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(std::size_t order);

/// Integrates f over [a, b] with an order-n Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, std::size_t order);

struct QuadratureConfig {
    std::size_t min_nodes = 200;
    std::size_t max_refinements = 6;   // node count doubles per refinement
    double rel_tol = 1e-8;
};

/// Refines the node count until successive estimates agree to rel_tol.
/// Throws on non-convergence. `breaks` may list interior points where the
/// integrand is non-smooth (the rule is applied piecewise).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureConfig& cfg, const std::vector<double>& breaks = {});

}  // namespace jumpvar
