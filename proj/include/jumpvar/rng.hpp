#pragma once

#include <array>
#include <cstdint>

#include "jumpvar/levy.hpp"

namespace jumpvar {

/// Philox4x64-10 counter-based generator block function. Stateless: the
/// output is a pure function of (counter, key), so per-path substreams are
/// independent and reproducible regardless of evaluation order.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

/// Draw stream for one Monte Carlo path: key = (seed, stream constant),
/// counter = (block index, path index, 0, 0). Every distribution below is a
/// deterministic function of (seed, path, draw order).
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t path_index);

    std::uint64_t next_u64();

    /// Uniform on (0, 1].
    double next_uniform();

    /// Standard normal (Box-Muller; pairs are cached).
    double next_normal();

    /// Exponential with unit rate.
    double next_exponential();

    /// Poisson count with the given mean (inversion for small means, the
    /// PTRS transformed-rejection sampler for large ones).
    std::uint64_t next_poisson(double mean);

    /// Jump size from `law`, resampling draws that leave the truncated
    /// support. `rejections` (optional) accumulates the resample count.
    double sample_jump(const JumpLaw& law, std::uint64_t* rejections = nullptr);

private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> counter_;
    std::array<std::uint64_t, 4> block_;
    int block_pos_;
    double cached_normal_;
    bool has_cached_normal_;

    void refill();
};

}  // namespace jumpvar
