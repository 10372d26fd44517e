#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "knoedel/monte_carlo.hpp"

using namespace knoedel;

namespace {
State N(std::uint32_t i) { return State::numbered(i); }
}  // namespace

TEST_CASE("SplitMix64 reference outputs") {
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
    CHECK(trial_seed(1234567, 0) == 6457827717110365317ULL);
    CHECK(trial_seed(1234567, 2) == 9817491932198370423ULL);
}

TEST_CASE("arrival threshold is exact at the boundary") {
    const ArrivalSampler third(ExactRational(1, 3));
    // red iff u < 2^64 / 3, i.e. u <= 6148914691236517205
    CHECK(third.draw(6148914691236517205ULL) == Arrival::Red);
    CHECK(third.draw(6148914691236517206ULL) == Arrival::Black);
    CHECK(third.draw(0) == Arrival::Red);
    CHECK(third.draw(~0ULL) == Arrival::Black);
    const ArrivalSampler half(ExactRational(1, 2));
    CHECK(half.draw((1ULL << 63) - 1) == Arrival::Red);
    CHECK(half.draw(1ULL << 63) == Arrival::Black);
}

TEST_CASE("zero steps leaves every trial at the start") {
    const auto emp = simulate({WalkModel::balanced(ModelKind::DoubleLarge), 0, 1000, 99, 1});
    CHECK(emp.trials == 1000);
    CHECK(emp.count(N(0)) == 1000);
    CHECK(emp.counts.size() == 1);
}

TEST_CASE("double-small first step is deterministic") {
    const auto emp = simulate({WalkModel::balanced(ModelKind::DoubleSmall), 1, 5000, 5, 1});
    CHECK(emp.count(N(1)) == 5000);
}

TEST_CASE("deterministic and independent of the thread count") {
    const SimConfig base{WalkModel::balanced(ModelKind::DoubleLarge), 9, 20000, 42, 1};
    auto threaded = base;
    threaded.threads = 7;
    const auto a = simulate(base);
    CHECK(a == simulate(base));
    CHECK(a == simulate(threaded));
    auto other = base;
    other.seed = 43;
    CHECK_FALSE(a == simulate(other));
}

TEST_CASE("counts sum to trials and stay on the residue class") {
    for (auto kind : {ModelKind::DoubleLarge, ModelKind::DoubleSmall}) {
        for (std::uint64_t steps = 0; steps <= 10; ++steps) {
            const auto emp = simulate({WalkModel::balanced(kind), steps, 3000, kDefaultSeed, 0});
            std::uint64_t total = 0;
            for (const auto& [s, c] : emp.counts) {
                total += c;
                CHECK(static_cast<int>(steps % 3) == residue_class(kind, s));
            }
            CHECK(total == 3000);
        }
    }
}

TEST_CASE("return-to-empty frequency after three steps") {
    const std::uint64_t trials = 1000000;
    const auto emp = simulate({WalkModel::balanced(ModelKind::DoubleLarge), 3, trials, kDefaultSeed, 0});
    const double p_hat = emp.frequency(N(0));
    CHECK(std::fabs(p_hat - 16.0 / 27.0) <= 4.0 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials)));
}

TEST_CASE("invalid configurations") {
    CHECK_THROWS_AS(simulate({WalkModel::balanced(ModelKind::DoubleLarge), 3, 0, 1, 1}), std::invalid_argument);
    const ExactRational huge(mpz_class("1"), mpz_class("100000000000000000000000"));
    CHECK_THROWS_AS(simulate({WalkModel(ModelKind::DoubleLarge, huge), 3, 10, 1, 1}), std::invalid_argument);
}
