#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knoedel/rational.hpp"

namespace knoedel {

/// A walk state: either "i partially filled boxes" or the exceptional
/// state beta (a single box filled to one third).
class State {
public:
    static constexpr State numbered(std::uint32_t index) { return State(index, false); }
    static constexpr State beta() { return State(0, true); }

    constexpr bool is_beta() const { return beta_; }
    /// Box count; throws for beta.
    std::uint32_t index() const;

    /// "beta" or the decimal index.
    std::string to_string() const;
    /// Inverse of to_string. Throws std::invalid_argument.
    static State parse(std::string_view token);

    // Numbered states order by index; beta sorts after every numbered state.
    friend constexpr auto operator<=>(const State&, const State&) = default;

private:
    constexpr State(std::uint32_t index, bool beta) : beta_(beta), index_(index) {}
    bool beta_;
    std::uint32_t index_;
};

enum class ModelKind {
    DoubleLarge,  ///< large items arrive in pairs: i -> i+2 or i -> i-1
    DoubleSmall,  ///< small items arrive in pairs: i -> i+1 or i -> i-2
};

/// Arrival colour on the state diagram. Red is the paired arrival in the
/// double-large model and the single large item in the double-small model.
enum class Arrival { Red, Black };

std::string_view model_token(ModelKind kind);
/// Accepts "double-large" / "double-small". Throws std::invalid_argument.
ModelKind parse_model_token(std::string_view token);

/// One of the two bin-packing walks with its arrival probabilities.
class WalkModel {
public:
    /// Balanced probabilities: red 1/3 for DoubleLarge, 2/3 for DoubleSmall.
    static WalkModel balanced(ModelKind kind);
    /// Throws std::invalid_argument unless 0 < red_probability < 1.
    WalkModel(ModelKind kind, ExactRational red_probability);

    ModelKind kind() const { return kind_; }
    const ExactRational& p() const { return p_; }
    const ExactRational& q() const { return q_; }
    const ExactRational& probability(Arrival a) const { return a == Arrival::Red ? p_ : q_; }
    bool is_balanced() const;

    /// Largest reachable box count after n steps.
    std::uint64_t reach_bound(std::uint64_t steps) const;

private:
    ModelKind kind_;
    ExactRational p_;
    ExactRational q_;
};

/// Deterministic successor of `from` under one arrival.
State arrival_target(ModelKind kind, State from, Arrival arrival);

/// Outgoing edges of `from`, arrivals with a common target merged. Weights sum to 1.
std::vector<std::pair<State, ExactRational>> transitions(const WalkModel& model, State from);

/// Step counts at which `s` can carry mass are exactly those congruent to
/// the returned value modulo 3.
int residue_class(ModelKind kind, State s);

/// Exact probability mass over states after `step` arrivals.
class StateDistribution {
public:
    StateDistribution() = default;
    StateDistribution(std::uint64_t step, std::vector<ExactRational> numbered, ExactRational beta);

    std::uint64_t step() const { return step_; }
    ExactRational mass(State s) const;
    /// Mass of numbered states 0..size()-1.
    const std::vector<ExactRational>& numbered() const { return numbered_; }
    const ExactRational& beta() const { return beta_; }
    ExactRational total() const;

    /// States with nonzero mass, numbered first, beta last.
    std::vector<std::pair<State, ExactRational>> support() const;

    friend bool operator==(const StateDistribution&, const StateDistribution&);

private:
    std::uint64_t step_ = 0;
    std::vector<ExactRational> numbered_;
    ExactRational beta_;
};

/// Rows for steps 0..max_steps, row 0 a point mass on state 0.
std::vector<StateDistribution> dp_distribution(const WalkModel& model, std::uint64_t max_steps);

/// Guard for the 2^n path enumeration.
inline constexpr std::uint64_t kBruteForceLimit = 22;

class OracleLimitExceeded : public std::length_error {
public:
    OracleLimitExceeded() : std::length_error("oracle limit exceeded") {}
};

/// Walks each of the 2^steps colour sequences individually and sums path
/// probabilities. Independent of dp_distribution.
StateDistribution brute_force_distribution(const WalkModel& model, std::uint64_t steps);

}  // namespace knoedel
