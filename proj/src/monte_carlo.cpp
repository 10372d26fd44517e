#include "knoedel/monte_carlo.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace knoedel {
namespace {

std::uint64_t to_u64(const mpz_class& v) {
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
        throw std::invalid_argument("simulation needs a probability with 64-bit numerator and denominator");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

std::map<State, std::uint64_t> run_trials(const SimConfig& config, const ArrivalSampler& sampler,
                                          std::uint64_t first, std::uint64_t last) {
    std::map<State, std::uint64_t> counts;
    const ModelKind kind = config.model.kind();
    for (std::uint64_t trial = first; trial < last; ++trial) {
        SplitMix64 rng(trial_seed(config.seed, trial));
        State s = State::numbered(0);
        for (std::uint64_t k = 0; k < config.steps; ++k) {
            s = arrival_target(kind, s, sampler.draw(rng.next()));
        }
        ++counts[s];
    }
    return counts;
}

}  // namespace

ArrivalSampler::ArrivalSampler(const ExactRational& p)
    : num_(to_u64(p.numerator())), den_(to_u64(p.denominator())) {}

EmpiricalDistribution simulate(const SimConfig& config) {
    if (config.trials == 0) {
        throw std::invalid_argument("trials must be positive");
    }
    const ArrivalSampler sampler(config.model.p());

    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));

    std::vector<std::map<State, std::uint64_t>> partial(workers);
    const std::uint64_t chunk = (config.trials + workers - 1) / workers;
    if (workers == 1) {
        partial[0] = run_trials(config, sampler, 0, config.trials);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = std::min(config.trials, w * chunk);
            const std::uint64_t last = std::min(config.trials, first + chunk);
            pool.emplace_back([&, w, first, last] { partial[w] = run_trials(config, sampler, first, last); });
        }
    }

    EmpiricalDistribution out;
    out.trials = config.trials;
    for (const auto& counts : partial) {
        for (const auto& [state, c] : counts) out.counts[state] += c;
    }
    return out;
}

}  // namespace knoedel
