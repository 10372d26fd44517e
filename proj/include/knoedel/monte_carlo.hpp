#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "knoedel/walk.hpp"

namespace knoedel {

__extension__ typedef unsigned __int128 uint128_t;

/// SplitMix64 (Steele, Lea, Flood 2014). The output sequence for a given
/// seed is part of the simulator's reproducibility contract.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Seed of trial `trial`'s private stream: mix(seed + (trial + 1) * gamma),
/// i.e. the trial-th output of SplitMix64(seed).
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64::mix(seed + (trial + 1) * SplitMix64::kGamma);
}

inline constexpr std::uint64_t kDefaultSeed = 20240611ULL;

struct SimConfig {
    WalkModel model = WalkModel::balanced(ModelKind::DoubleLarge);
    std::uint64_t steps = 0;
    std::uint64_t trials = 1;
    std::uint64_t seed = kDefaultSeed;
    /// 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
    unsigned threads = 0;
};

struct EmpiricalDistribution {
    std::map<State, std::uint64_t> counts;
    std::uint64_t trials = 0;

    std::uint64_t count(State s) const {
        auto it = counts.find(s);
        return it == counts.end() ? 0 : it->second;
    }
    double frequency(State s) const { return static_cast<double>(count(s)) / static_cast<double>(trials); }

    friend bool operator==(const EmpiricalDistribution&, const EmpiricalDistribution&) = default;
};

/// Exact-threshold arrival draw: red iff u * den < num * 2^64 where
/// p = num/den and u is a uniform 64-bit word.
class ArrivalSampler {
public:
    /// Throws std::invalid_argument if p's numerator or denominator exceed 64 bits.
    explicit ArrivalSampler(const ExactRational& p);
    Arrival draw(std::uint64_t word) const {
        const auto lhs = static_cast<uint128_t>(word) * den_;
        return lhs < (static_cast<uint128_t>(num_) << 64) ? Arrival::Red : Arrival::Black;
    }

private:
    std::uint64_t num_;
    std::uint64_t den_;
};

/// Throws std::invalid_argument if trials == 0.
EmpiricalDistribution simulate(const SimConfig& config);

}  // namespace knoedel
