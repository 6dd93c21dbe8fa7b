#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace jumpvar {

/// Standard normal CDF via erfc; accurate to a few ulps over the whole line.
double normal_cdf(double x);

/// Inverse standard normal CDF, computed by Newton refinement of a rational
/// initial guess against the erfc-based CDF. |Phi(result) - p| <= 1e-12-ish;
/// well inside the 1e-9 contract.
double normal_quantile(double p);

/// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_upper_tail(double statistic, std::size_t df);

double mean(const std::vector<double>& v);

/// Sample variance with the n-1 denominator.
double sample_variance(const std::vector<double>& v);
double sample_std(const std::vector<double>& v);

/// Pearson correlation; NaN when either side has zero variance.
double pearson(const std::vector<double>& a, const std::vector<double>& b);

/// Running-sum accumulator with Neumaier compensation, so reductions over
/// large Monte Carlo ensembles keep full precision.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace jumpvar
