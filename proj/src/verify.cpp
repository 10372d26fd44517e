#include "knoedel/verify.hpp"

#include <algorithm>
#include <sstream>

#include "knoedel/closed_forms.hpp"
#include "knoedel/walk.hpp"

namespace knoedel {
namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); result_.passed = true; }

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++result_.checks;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.first_failure = describe();
        }
    }

    SuiteResult finish() && { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string mismatch(std::string_view what, const ExactRational& got, const ExactRational& want) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    return os.str();
}

SuiteResult kernel_suite() {
    Suite s("kernel identities");
    for (const auto& id : kernel_identities_check()) {
        s.check(id.passed, [&] { return id.name + " -> " + id.detail; });
    }
    return std::move(s).finish();
}

SuiteResult series_suite(std::size_t order) {
    Suite s("series reversion and reciprocal");
    const auto reverted = series_reversion(x_of_t().to_series(order));
    const auto t = t_series(order);
    for (std::size_t k = 0; k < order; ++k) {
        s.check(reverted[k] == t[k], [&] { return mismatch("[x^" + std::to_string(k) + "] t", t[k], reverted[k]); });
    }
    const auto recip = series_recip(TruncatedSeries::constant(1, order) - t);
    const auto inv = inv_one_minus_t_series(order);
    for (std::size_t k = 0; k < order; ++k) {
        s.check(recip[k] == inv[k], [&] { return mismatch("[x^" + std::to_string(k) + "] 1/(1-t)", inv[k], recip[k]); });
    }
    const auto u1 = u1_series(order);
    for (std::size_t k = 0; k < order; ++k) {
        const auto want = ExactRational(2, 3) * recip[k];
        s.check(u1[k] == want, [&] { return mismatch("[x^" + std::to_string(k) + "] U1", u1[k], want); });
    }
    return std::move(s).finish();
}

SuiteResult girard_waring_suite(std::size_t max_m) {
    Suite s("Girard-Waring sums");
    const auto [e, f] = sigma_tau_symmetric();
    Polynomial p_prev(2), p_cur = e;   // sigma^m + tau^m
    Polynomial h_prev(0), h_cur(1);    // (tau^m - sigma^m)/(tau - sigma)
    s.check(girard_waring_quotient(0) == h_prev, [] { return std::string("quotient m=0"); });
    for (std::size_t m = 1; m <= max_m; ++m) {
        s.check(girard_waring_power_sum(m) == p_cur, [&] { return "power sum m=" + std::to_string(m); });
        s.check(girard_waring_quotient(m) == h_cur, [&] { return "quotient m=" + std::to_string(m); });
        Polynomial p_next = e * p_cur - f * p_prev;
        Polynomial h_next = e * h_cur - f * h_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        h_prev = std::move(h_cur);
        h_cur = std::move(h_next);
    }
    return std::move(s).finish();
}

SuiteResult double_large_suite(const std::vector<StateDistribution>& rows, bool inject_fault) {
    Suite s("double-large closed forms vs DP");
    for (const auto& row : rows) {
        const auto n = row.step();
        for (std::uint64_t j = 0; j <= 2 * n; ++j) {
            ExactRational got = theorem1_coeff(n, j);
            if (inject_fault && n == 3 && j == 0) got += ExactRational(1, 27);
            const ExactRational want = row.mass(State::numbered(static_cast<std::uint32_t>(j)));
            s.check(got == want, [&] { return mismatch("n=" + std::to_string(n) + " j=" + std::to_string(j), got, want); });
        }
        const ExactRational beta = n % 3 == 1 ? fbeta_coeff((n - 1) / 3) : ExactRational{};
        s.check(beta == row.beta(), [&] { return mismatch("beta n=" + std::to_string(n), beta, row.beta()); });
    }
    return std::move(s).finish();
}

SuiteResult double_small_suite(const std::vector<StateDistribution>& rows) {
    Suite s("double-small closed forms vs DP");
    for (const auto& row : rows) {
        const auto n = row.step();
        const ExactRational zero = n % 3 == 0 ? g0_coeff(n / 3) : ExactRational{};
        s.check(zero == row.mass(State::numbered(0)), [&] { return mismatch("g0 n=" + std::to_string(n), zero, row.mass(State::numbered(0))); });
        const ExactRational beta = n % 3 == 2 ? gbeta_coeff((n - 2) / 3) : ExactRational{};
        s.check(beta == row.beta(), [&] { return mismatch("gbeta n=" + std::to_string(n), beta, row.beta()); });
        for (std::uint64_t j = 1; j <= n; ++j) {
            const ExactRational got = theorem2_coeff(n, j);
            const ExactRational want = row.mass(State::numbered(static_cast<std::uint32_t>(j)));
            s.check(got == want, [&] { return mismatch("n=" + std::to_string(n) + " j=" + std::to_string(j), got, want); });
        }
        if (n % 3 == 1) {
            // gbeta at 3N+2 is a third of state 1 at 3N+1.
            const ExactRational third = row.mass(State::numbered(1)) / ExactRational(3);
            s.check(third == gbeta_coeff(n / 3), [&] { return mismatch("gbeta relation n=" + std::to_string(n), third, gbeta_coeff(n / 3)); });
        }
    }
    return std::move(s).finish();
}

SuiteResult rational_function_suite(std::size_t order) {
    Suite s("u-coefficient rational functions");
    const std::size_t series_order = std::min<std::size_t>(order, 9);
    const std::uint64_t max_m = std::min<std::uint64_t>(12, order);
    for (std::uint64_t m = 0; m <= max_m; ++m) {
        const auto fx = u_coeff_F(m).compose(t_series(series_order));
        for (std::size_t big_n = 0; big_n < series_order; ++big_n) {
            if (3 * big_n < m) {
                s.check(fx[big_n].is_zero(), [&] { return "F below diagonal m=" + std::to_string(m); });
                continue;
            }
            const auto want = theorem1_coeff(3 * big_n - m, m);
            s.check(fx[big_n] == want, [&] { return mismatch("F m=" + std::to_string(m) + " N=" + std::to_string(big_n), fx[big_n], want); });
        }
        if (m == 0) continue;
        const auto gx = G_u_coeff(m).compose(t_series(series_order));
        for (std::size_t big_n = 0; big_n < series_order; ++big_n) {
            const auto want = theorem2_coeff(m + 3 * big_n, m);
            s.check(gx[big_n] == want, [&] { return mismatch("G j=" + std::to_string(m) + " N=" + std::to_string(big_n), gx[big_n], want); });
        }
    }
    return std::move(s).finish();
}

SuiteResult structural_suite(ModelKind kind, const std::vector<StateDistribution>& rows) {
    Suite s(std::string("structural laws, ") + std::string(model_token(kind)));
    for (const auto& row : rows) {
        s.check(row.total() == ExactRational(1), [&] { return "row sum at n=" + std::to_string(row.step()); });
        for (const auto& [state, m] : row.support()) {
            s.check(m.sign() > 0 && static_cast<int>(row.step() % 3) == residue_class(kind, state),
                    [&] { return "state " + state.to_string() + " at n=" + std::to_string(row.step()); });
        }
    }
    return std::move(s).finish();
}

SuiteResult oracle_suite(const WalkModel& model, const std::vector<StateDistribution>& rows) {
    Suite s(std::string("DP vs path enumeration, ") + std::string(model_token(model.kind())));
    const std::uint64_t limit = std::min<std::uint64_t>(14, rows.size() - 1);
    for (std::uint64_t n = 0; n <= limit; ++n) {
        s.check(brute_force_distribution(model, n) == rows[n], [&] { return "n=" + std::to_string(n); });
    }
    return std::move(s).finish();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    const std::size_t order = std::max<std::size_t>(options.order, 2);
    const auto large = WalkModel::balanced(ModelKind::DoubleLarge);
    const auto small = WalkModel::balanced(ModelKind::DoubleSmall);
    const auto large_rows = dp_distribution(large, options.max_steps);
    const auto small_rows = dp_distribution(small, options.max_steps);

    std::vector<SuiteResult> out;
    out.push_back(kernel_suite());
    out.push_back(series_suite(order));
    out.push_back(girard_waring_suite(order));
    out.push_back(double_large_suite(large_rows, options.inject_fault));
    out.push_back(double_small_suite(small_rows));
    out.push_back(rational_function_suite(order));
    out.push_back(structural_suite(ModelKind::DoubleLarge, large_rows));
    out.push_back(structural_suite(ModelKind::DoubleSmall, small_rows));
    out.push_back(oracle_suite(large, large_rows));
    out.push_back(oracle_suite(small, small_rows));
    return out;
}

}  // namespace knoedel
