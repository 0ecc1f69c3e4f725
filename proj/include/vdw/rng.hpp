#pragma once

#include <cstdint>
#include <stdexcept>

#include "vdw/ap.hpp"

namespace vdw {

/// Parameters of one Bernoulli(p) sample of [n].
struct SamplingParams {
    Vertex n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

namespace rng {

// SplitMix64 (Steele, Lea, Flood). Counter-based: output i of a stream keyed
// by `key` is mix64(key + (i+1)*GAMMA). Identical on every platform.
inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t key, std::uint64_t counter) {
    return mix64(key + (counter + 1) * kGamma);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Child stream key for a labelled substream (trial index, grid cell, ...).
inline std::uint64_t derive(std::uint64_t key, std::uint64_t label) {
    return mix64(key ^ at(label, 0));
}

}  // namespace rng

/// The p-random subset of [n]: element k is included iff the k-th output of
/// the seed's SplitMix64 stream, mapped to [0,1), is below p. Same params,
/// same subset, on every platform.
inline GroundSubset random_subset(const SamplingParams& params) {
    if (params.n < 0) throw std::invalid_argument("random_subset: n must be >= 0");
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw std::invalid_argument("random_subset: p must lie in [0, 1]");
    std::vector<Vertex> elems;
    for (Vertex k = 1; k <= params.n; ++k) {
        if (rng::unit_double(rng::at(params.seed, static_cast<std::uint64_t>(k))) < params.p)
            elems.push_back(k);
    }
    return GroundSubset(params.n, std::move(elems));
}

}  // namespace vdw
