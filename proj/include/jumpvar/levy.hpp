#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "jumpvar/quadrature.hpp"

namespace jumpvar {

/// Jump-size distributions available for a compound-Poisson component.
struct NormalLaw {
    double mean = 0.0;
    double std = 1.0;
};
struct DoubleExponentialLaw {
    double p = 0.5;        // probability of an upward jump
    double eta_plus = 1.0;  // upward rate
    double eta_minus = 1.0; // downward rate
};
struct PointMassLaw {
    double value = 0.0;
};

class JumpLaw {
public:
    using Variant = std::variant<NormalLaw, DoubleExponentialLaw, PointMassLaw>;

    JumpLaw() : law_(PointMassLaw{}) {}
    explicit JumpLaw(Variant law) : law_(std::move(law)) { validate(); }

    void validate() const;

    bool is_point_mass() const { return std::holds_alternative<PointMassLaw>(law_); }
    double point_value() const { return std::get<PointMassLaw>(law_).value; }

    /// Probability density (untruncated law).
    double density(double zeta) const;

    /// Truncated support: +-8 std for the normal law, the 1e-10 tail quantile
    /// for the double-exponential, the point itself for a point mass. The
    /// omitted tail mass bounds the expectation truncation error.
    std::pair<double, double> truncated_support() const;

    /// Interior non-smooth points of the density inside the support.
    std::vector<double> density_breaks() const;

    /// E[g(zeta)] over the truncated support by quadrature (exact evaluation
    /// for a point mass).
    double expectation(const std::function<double(double)>& g, const QuadratureConfig& quad) const;

    const Variant& variant() const { return law_; }

    nlohmann::json to_json() const;
    static JumpLaw from_json(const nlohmann::json& j);

private:
    Variant law_;
};

/// One compound-Poisson jump component: intensity, jump-size law, and linear
/// per-asset loadings (a size-zeta jump moves asset i by a factor
/// 1 + loading[i] * zeta).
struct JumpComponent {
    double lambda = 0.0;            // jumps per day
    JumpLaw law;
    std::vector<double> loadings;   // one per asset
};

struct LevyModel {
    std::vector<JumpComponent> components;

    std::size_t n_assets() const {
        return components.empty() ? 0 : components[0].loadings.size();
    }

    /// Checks intensities, law parameters, and that 1 + loading * zeta stays
    /// positive over each law's truncated support.
    void validate() const;

    nlohmann::json to_json() const;
    static LevyModel from_json(const nlohmann::json& j);
};

}  // namespace jumpvar
