#include "knoedel/walk.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace knoedel {

std::uint32_t State::index() const {
    if (beta_) throw std::logic_error("beta has no index");
    return index_;
}

std::string State::to_string() const { return beta_ ? "beta" : std::to_string(index_); }

State State::parse(std::string_view token) {
    if (token == "beta" || token == "b") return beta();
    std::uint32_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc() || ptr != end) {
        throw std::invalid_argument("invalid state '" + std::string(token) + "'");
    }
    return numbered(value);
}

std::string_view model_token(ModelKind kind) {
    return kind == ModelKind::DoubleLarge ? "double-large" : "double-small";
}

ModelKind parse_model_token(std::string_view token) {
    if (token == "double-large") return ModelKind::DoubleLarge;
    if (token == "double-small") return ModelKind::DoubleSmall;
    throw std::invalid_argument("unknown model '" + std::string(token) + "'");
}

WalkModel WalkModel::balanced(ModelKind kind) {
    return WalkModel(kind, kind == ModelKind::DoubleLarge ? ExactRational(1, 3) : ExactRational(2, 3));
}

WalkModel::WalkModel(ModelKind kind, ExactRational red_probability)
    : kind_(kind), p_(std::move(red_probability)), q_(ExactRational(1) - p_) {
    if (p_.sign() <= 0 || q_.sign() <= 0) {
        throw std::invalid_argument("red probability must lie strictly between 0 and 1");
    }
}

bool WalkModel::is_balanced() const { return p_ == balanced(kind_).p(); }

std::uint64_t WalkModel::reach_bound(std::uint64_t steps) const {
    return kind_ == ModelKind::DoubleLarge ? 2 * steps : steps;
}

State arrival_target(ModelKind kind, State from, Arrival arrival) {
    const bool red = arrival == Arrival::Red;
    if (kind == ModelKind::DoubleLarge) {
        if (from.is_beta()) return State::numbered(1);
        const auto i = from.index();
        if (i == 0) return red ? State::numbered(2) : State::beta();
        return red ? State::numbered(i + 2) : State::numbered(i - 1);
    }
    // DoubleSmall, read off the incoming-edge recursions
    //   g0 <- z g_beta + q z g2,  g_beta <- q z g1,  g1 <- z g0 + q z g3,
    //   g_i <- p z g_{i-1} + q z g_{i+2}  (i >= 2).
    if (from.is_beta()) return State::numbered(0);
    const auto i = from.index();
    switch (i) {
        case 0: return State::numbered(1);
        case 1: return red ? State::numbered(2) : State::beta();
        case 2: return red ? State::numbered(3) : State::numbered(0);
        default: return red ? State::numbered(i + 1) : State::numbered(i - 2);
    }
}

std::vector<std::pair<State, ExactRational>> transitions(const WalkModel& model, State from) {
    std::vector<std::pair<State, ExactRational>> out;
    for (Arrival a : {Arrival::Red, Arrival::Black}) {
        const State to = arrival_target(model.kind(), from, a);
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == to; });
        if (it == out.end()) {
            out.emplace_back(to, model.probability(a));
        } else {
            it->second += model.probability(a);
        }
    }
    return out;
}

int residue_class(ModelKind kind, State s) {
    if (kind == ModelKind::DoubleLarge) {
        if (s.is_beta()) return 1;
        return static_cast<int>((3 - s.index() % 3) % 3);
    }
    if (s.is_beta()) return 2;
    return static_cast<int>(s.index() % 3);
}

StateDistribution::StateDistribution(std::uint64_t step, std::vector<ExactRational> numbered, ExactRational beta)
    : step_(step), numbered_(std::move(numbered)), beta_(std::move(beta)) {}

ExactRational StateDistribution::mass(State s) const {
    if (s.is_beta()) return beta_;
    return s.index() < numbered_.size() ? numbered_[s.index()] : ExactRational{};
}

ExactRational StateDistribution::total() const {
    ExactRational acc = beta_;
    for (const auto& m : numbered_) acc += m;
    return acc;
}

std::vector<std::pair<State, ExactRational>> StateDistribution::support() const {
    std::vector<std::pair<State, ExactRational>> out;
    for (std::size_t i = 0; i < numbered_.size(); ++i) {
        if (!numbered_[i].is_zero()) out.emplace_back(State::numbered(static_cast<std::uint32_t>(i)), numbered_[i]);
    }
    if (!beta_.is_zero()) out.emplace_back(State::beta(), beta_);
    return out;
}

bool operator==(const StateDistribution& a, const StateDistribution& b) {
    return a.step_ == b.step_ && a.support() == b.support();
}

std::vector<StateDistribution> dp_distribution(const WalkModel& model, std::uint64_t max_steps) {
    std::vector<StateDistribution> rows;
    rows.reserve(max_steps + 1);
    rows.emplace_back(0, std::vector<ExactRational>{ExactRational(1)}, ExactRational{});

    // Per-state outgoing edges are fixed, so resolve them once per source.
    auto push = [&](State from, const ExactRational& w, std::vector<ExactRational>& numbered, ExactRational& beta) {
        for (const auto& [to, weight] : transitions(model, from)) {
            if (to.is_beta()) {
                beta += w * weight;
            } else {
                numbered[to.index()] += w * weight;
            }
        }
    };

    for (std::uint64_t n = 1; n <= max_steps; ++n) {
        const auto& prev = rows.back();
        std::vector<ExactRational> numbered(model.reach_bound(n) + 1);
        ExactRational beta;
        for (std::size_t i = 0; i < prev.numbered().size(); ++i) {
            if (!prev.numbered()[i].is_zero()) {
                push(State::numbered(static_cast<std::uint32_t>(i)), prev.numbered()[i], numbered, beta);
            }
        }
        if (!prev.beta().is_zero()) push(State::beta(), prev.beta(), numbered, beta);
        rows.emplace_back(n, std::move(numbered), std::move(beta));
    }
    return rows;
}

StateDistribution brute_force_distribution(const WalkModel& model, std::uint64_t steps) {
    if (steps > kBruteForceLimit) throw OracleLimitExceeded();

    // Tally paths by (final state, number of red arrivals); each such path has
    // probability p^reds q^(steps - reds).
    std::map<State, std::vector<std::uint64_t>> tally;
    const std::uint64_t paths = std::uint64_t{1} << steps;
    for (std::uint64_t mask = 0; mask < paths; ++mask) {
        State s = State::numbered(0);
        unsigned reds = 0;
        for (std::uint64_t k = 0; k < steps; ++k) {
            const bool red = (mask >> k) & 1u;
            reds += red;
            s = arrival_target(model.kind(), s, red ? Arrival::Red : Arrival::Black);
        }
        auto& counts = tally[s];
        if (counts.empty()) counts.resize(steps + 1);
        ++counts[reds];
    }

    std::vector<ExactRational> numbered(model.reach_bound(steps) + 1);
    ExactRational beta;
    for (const auto& [state, counts] : tally) {
        ExactRational acc;
        for (std::size_t r = 0; r < counts.size(); ++r) {
            if (counts[r] == 0) continue;
            acc += ExactRational(mpz_class(static_cast<unsigned long>(counts[r]))) * model.p().pow(static_cast<long>(r)) *
                   model.q().pow(static_cast<long>(steps - r));
        }
        if (state.is_beta()) {
            beta = acc;
        } else {
            numbered.at(state.index()) = acc;
        }
    }
    return StateDistribution(steps, std::move(numbered), std::move(beta));
}

}  // namespace knoedel
