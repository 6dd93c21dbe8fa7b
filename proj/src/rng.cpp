#include "jumpvar/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace jumpvar {

namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key) {
    std::array<std::uint64_t, 4> c = counter;
    std::array<std::uint64_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, c[0], hi0, lo0);
        mulhilo(kPhiloxM1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

PathRng::PathRng(std::uint64_t seed, std::uint64_t path_index)
    : key_{seed, 0x6A09E667F3BCC909ull},
      counter_{0, path_index, 0, 0},
      block_pos_(4),
      cached_normal_(0.0),
      has_cached_normal_(false) {}

void PathRng::refill() {
    block_ = philox4x64(counter_, key_);
    ++counter_[0];
    if (counter_[0] == 0) ++counter_[3];  // carry into the unused top limb
    block_pos_ = 0;
}

std::uint64_t PathRng::next_u64() {
    if (block_pos_ == 4) refill();
    return block_[block_pos_++];
}

double PathRng::next_uniform() {
    // 53 high bits, shifted into (0, 1] so logs are always finite.
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double PathRng::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

double PathRng::next_exponential() { return -std::log(next_uniform()); }

std::uint64_t PathRng::next_poisson(double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean < 30.0) {
        // Inversion by sequential search.
        const double limit = std::exp(-mean);
        double prod = next_uniform();
        std::uint64_t k = 0;
        while (prod > limit) {
            prod *= next_uniform();
            ++k;
        }
        return k;
    }
    // Hormann's PTRS transformed-rejection sampler.
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
        double u = next_uniform() - 0.5;
        const double v = next_uniform();
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            kf * log_mean - mean - std::lgamma(kf + 1.0)) {
            return static_cast<std::uint64_t>(kf);
        }
    }
}

double PathRng::sample_jump(const JumpLaw& law, std::uint64_t* rejections) {
    if (law.is_point_mass()) return law.point_value();
    const auto [lo, hi] = law.truncated_support();
    for (;;) {
        double z;
        if (const auto* n = std::get_if<NormalLaw>(&law.variant())) {
            z = n->mean + n->std * next_normal();
        } else {
            const auto& de = std::get<DoubleExponentialLaw>(law.variant());
            const double side = next_uniform();
            const double e = next_exponential();
            z = (side <= de.p) ? e / de.eta_plus : -e / de.eta_minus;
        }
        if (z >= lo && z <= hi) return z;
        if (rejections) ++(*rejections);
    }
}

}  // namespace jumpvar
