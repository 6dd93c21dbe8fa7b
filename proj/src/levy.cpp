#include "jumpvar/levy.hpp"

#include <cmath>
#include <stdexcept>

namespace jumpvar {

namespace {
constexpr double kTailMass = 1e-10;
constexpr double kNormalRange = 8.0;
}  // namespace

void JumpLaw::validate() const {
    if (const auto* n = std::get_if<NormalLaw>(&law_)) {
        if (!(n->std > 0.0)) throw std::invalid_argument("normal jump law: std must be > 0");
    } else if (const auto* de = std::get_if<DoubleExponentialLaw>(&law_)) {
        if (!(de->p >= 0.0 && de->p <= 1.0)) {
            throw std::invalid_argument("double-exponential jump law: p must be in [0,1]");
        }
        if (!(de->eta_plus > 0.0) || !(de->eta_minus > 0.0)) {
            throw std::invalid_argument("double-exponential jump law: rates must be > 0");
        }
    }
}

double JumpLaw::density(double zeta) const {
    if (const auto* n = std::get_if<NormalLaw>(&law_)) {
        const double z = (zeta - n->mean) / n->std;
        return std::exp(-0.5 * z * z) / (n->std * std::sqrt(2.0 * M_PI));
    }
    if (const auto* de = std::get_if<DoubleExponentialLaw>(&law_)) {
        if (zeta >= 0.0) return de->p * de->eta_plus * std::exp(-de->eta_plus * zeta);
        return (1.0 - de->p) * de->eta_minus * std::exp(de->eta_minus * zeta);
    }
    throw std::logic_error("point-mass law has no density");
}

std::pair<double, double> JumpLaw::truncated_support() const {
    if (const auto* n = std::get_if<NormalLaw>(&law_)) {
        return {n->mean - kNormalRange * n->std, n->mean + kNormalRange * n->std};
    }
    if (const auto* de = std::get_if<DoubleExponentialLaw>(&law_)) {
        // Points beyond which the remaining one-sided mass is kTailMass.
        const double hi = de->p > kTailMass ? std::log(de->p / kTailMass) / de->eta_plus : 0.0;
        const double lo =
            (1.0 - de->p) > kTailMass ? -std::log((1.0 - de->p) / kTailMass) / de->eta_minus : 0.0;
        return {lo, hi};
    }
    const double v = std::get<PointMassLaw>(law_).value;
    return {v, v};
}

std::vector<double> JumpLaw::density_breaks() const {
    if (std::holds_alternative<DoubleExponentialLaw>(law_)) return {0.0};
    return {};
}

double JumpLaw::expectation(const std::function<double(double)>& g,
                            const QuadratureConfig& quad) const {
    if (is_point_mass()) return g(point_value());
    const auto [lo, hi] = truncated_support();
    auto integrand = [&](double z) { return g(z) * density(z); };
    return integrate_adaptive(integrand, lo, hi, quad, density_breaks());
}

nlohmann::json JumpLaw::to_json() const {
    nlohmann::json j;
    if (const auto* n = std::get_if<NormalLaw>(&law_)) {
        j["type"] = "normal";
        j["mean"] = n->mean;
        j["std"] = n->std;
    } else if (const auto* de = std::get_if<DoubleExponentialLaw>(&law_)) {
        j["type"] = "double_exponential";
        j["p"] = de->p;
        j["eta_plus"] = de->eta_plus;
        j["eta_minus"] = de->eta_minus;
    } else {
        j["type"] = "point_mass";
        j["value"] = std::get<PointMassLaw>(law_).value;
    }
    return j;
}

JumpLaw JumpLaw::from_json(const nlohmann::json& j) {
    const std::string type = j.at("type");
    if (type == "normal") {
        return JumpLaw(NormalLaw{j.at("mean").get<double>(), j.at("std").get<double>()});
    }
    if (type == "double_exponential") {
        return JumpLaw(DoubleExponentialLaw{j.at("p").get<double>(),
                                            j.at("eta_plus").get<double>(),
                                            j.at("eta_minus").get<double>()});
    }
    if (type == "point_mass") {
        return JumpLaw(PointMassLaw{j.at("value").get<double>()});
    }
    throw std::invalid_argument("unknown jump law type: " + type);
}

void LevyModel::validate() const {
    if (components.empty()) throw std::invalid_argument("levy model has no components");
    const std::size_t n = components[0].loadings.size();
    for (const auto& comp : components) {
        if (!(comp.lambda > 0.0)) {
            throw std::invalid_argument("jump component intensity must be > 0");
        }
        comp.law.validate();
        if (comp.loadings.size() != n || n == 0) {
            throw std::invalid_argument("jump component loadings must be non-empty and consistent");
        }
        const auto [lo, hi] = comp.law.truncated_support();
        for (std::size_t i = 0; i < n; ++i) {
            // Linear in zeta, so checking the support endpoints suffices.
            if (!(1.0 + comp.loadings[i] * lo > 0.0) || !(1.0 + comp.loadings[i] * hi > 0.0)) {
                throw std::invalid_argument(
                    "loading " + std::to_string(comp.loadings[i]) + " for asset " +
                    std::to_string(i) + " violates 1 + loading * zeta > 0 on the jump support");
            }
        }
    }
}

nlohmann::json LevyModel::to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : components) {
        comps.push_back({{"lambda", c.lambda}, {"law", c.law.to_json()}, {"loadings", c.loadings}});
    }
    return nlohmann::json{{"components", comps}};
}

LevyModel LevyModel::from_json(const nlohmann::json& j) {
    LevyModel model;
    for (const auto& c : j.at("components")) {
        JumpComponent comp;
        comp.lambda = c.at("lambda").get<double>();
        comp.law = JumpLaw::from_json(c.at("law"));
        comp.loadings = c.at("loadings").get<std::vector<double>>();
        model.components.push_back(std::move(comp));
    }
    model.validate();
    return model;
}

}  // namespace jumpvar
