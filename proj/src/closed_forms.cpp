#include "knoedel/closed_forms.hpp"

#include <sstream>
#include <stdexcept>

#include "knoedel/binomial.hpp"

namespace knoedel {
namespace {

using i64 = std::int64_t;

ExactRational power(long base, i64 exponent) { return ExactRational(base).pow(static_cast<long>(exponent)); }

ExactRational sign_of(i64 exponent) { return (exponent % 2 == 0) ? ExactRational(1) : ExactRational(-1); }

const Polynomial& t_var() {
    static const Polynomial t = Polynomial::variable();
    return t;
}

Polynomial one_minus(long a) { return Polynomial({1, -a}); }  // 1 - a t

/// Rational function h(t), composed with t(x).
TruncatedSeries in_x(const RationalFunction& h, std::size_t order) { return h.compose(t_series(order)); }

/// Elements a + b W of Q[t][W] / (W^2 - (4t - 3t^2)).
struct Surd {
    Polynomial a;
    Polynomial b;

    static const Polynomial& w_squared() {
        static const Polynomial w2({0, 4, -3});
        return w2;
    }
    friend Surd operator+(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b}; }
    friend Surd operator-(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b}; }
    friend Surd operator*(const Surd& x, const Surd& y) {
        return {x.a * y.a + x.b * y.b * w_squared(), x.a * y.b + x.b * y.a};
    }
};

/// Polynomial in an auxiliary variable (U or V) with coefficients in Q[t].
using Bivariate = std::vector<Polynomial>;

Bivariate multiply(const Bivariate& a, const Bivariate& b) {
    if (a.empty() || b.empty()) return {};
    Bivariate out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::string describe(const std::vector<std::pair<std::string, Polynomial>>& remainders) {
    std::ostringstream os;
    for (const auto& [label, r] : remainders) {
        if (!r.is_zero()) os << label << ": " << r << "; ";
    }
    return os.str();
}

}  // namespace

Polynomial x_of_t() {
    // (27/4) t (1-t)^2
    return Polynomial(ExactRational(27, 4)) * t_var() * one_minus(1).pow(2);
}

TruncatedSeries t_series(std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t k = 1; k < order; ++k) {
        const auto kk = static_cast<i64>(k);
        out[k] = binom_general(3 * kk - 2, kk - 1) * power(2, 2 * kk) / (power(3, 3 * kk) * ExactRational(static_cast<long>(k)));
    }
    return out;
}

TruncatedSeries inv_one_minus_t_series(std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t k = 0; k < order; ++k) {
        const auto kk = static_cast<i64>(k);
        out[k] = binom_general(3 * kk, kk) * power(2, 2 * kk) / (power(3, 3 * kk) * ExactRational(2 * static_cast<long>(k) + 1));
    }
    return out;
}

TruncatedSeries u1_series(std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t k = 0; k < order; ++k) {
        const auto kk = static_cast<i64>(k);
        out[k] = binom_general(3 * kk, kk) * power(2, 2 * kk + 1) / (power(3, 3 * kk + 1) * ExactRational(2 * static_cast<long>(k) + 1));
    }
    return out;
}

TruncatedSeries f0_series(std::size_t order) {
    return in_x(RationalFunction(Polynomial(1), one_minus(1) * one_minus(3)), order);
}

TruncatedSeries g0_series(std::size_t order) {
    return in_x(RationalFunction(Polynomial(4), one_minus(3) * Polynomial({4, -3})), order);
}

ExactRational fbeta_coeff(std::uint64_t n) {
    const auto nn = static_cast<i64>(n);
    return power(2, 2 * nn + 1) / power(3, 3 * nn + 1) * binom_general(3 * nn + 1, nn);
}

ExactRational theorem1_coeff(std::uint64_t n, std::uint64_t j) {
    if ((n + j) % 3 != 0) return {};
    const auto jj = static_cast<i64>(j);
    const auto big_n = static_cast<i64>((n + j) / 3);
    ExactRational sum;
    for (i64 k = 0; 2 * k <= jj; ++k) {
        sum += sign_of(k) * binom_general(jj - k, k) * binom_general(k - 2 * big_n - 2, big_n - jj + k);
    }
    for (i64 k = 0; 2 * k <= jj - 1; ++k) {
        sum += ExactRational(3) * sign_of(k) * binom_general(jj - 1 - k, k) * binom_general(k - 2 * big_n - 1, big_n - jj + k);
    }
    return ExactRational(3, 2).pow(static_cast<long>(jj)) * ExactRational(4, 27).pow(static_cast<long>(big_n)) *
           sign_of(big_n - jj) * sum;
}

RationalFunction u_coeff_F(std::uint64_t m) {
    const auto mm = static_cast<i64>(m);
    const Polynomial t_minus_1({-1, 1});
    Polynomial num;
    for (i64 k = 0; 2 * k <= mm; ++k) {
        num += Polynomial(sign_of(k) * binom_general(mm - k, k)) * t_minus_1.pow(static_cast<unsigned>(k)) *
               t_var().pow(static_cast<unsigned>(mm - k));
    }
    for (i64 k = 0; 2 * k <= mm - 1; ++k) {
        num -= Polynomial(ExactRational(3) * sign_of(k) * binom_general(mm - 1 - k, k)) *
               t_minus_1.pow(static_cast<unsigned>(k + 1)) * t_var().pow(static_cast<unsigned>(mm - k));
    }
    num *= Polynomial(ExactRational(3, 2).pow(static_cast<long>(mm)));
    return RationalFunction(num, one_minus(3) * one_minus(1));
}

ExactRational g0_coeff(std::uint64_t big_n) {
    const auto nn = static_cast<i64>(big_n);
    ExactRational sum;
    for (i64 i = 0; i <= nn; ++i) {
        sum += power(2, 2 * i) / power(3, 2 * nn + i) * binom_general(2 * nn + i, i);
    }
    return sum;
}

ExactRational gbeta_coeff(std::uint64_t big_n) {
    const auto nn = static_cast<i64>(big_n);
    ExactRational sum;
    for (i64 i = 0; i <= nn; ++i) {
        sum += power(2, 2 * i) / power(3, 2 * nn + i + 1) * binom_general(2 * nn + 1 + i, i);
    }
    return sum;
}

ExactRational theorem2_coeff(std::uint64_t n, std::uint64_t j) {
    if (j == 0) {
        throw std::invalid_argument("state 0 of the double-small walk is given by g0_coeff");
    }
    if (n < j || (n - j) % 3 != 0) return {};
    const auto jj = static_cast<i64>(j);
    const auto nn = static_cast<i64>((n - j) / 3);
    ExactRational sum;
    for (i64 i = 0; i <= nn; ++i) {
        sum += power(2, 2 * i + jj - 1) / power(3, 2 * nn + i + jj - 1) * binom_general(2 * nn + jj + i, i);
    }
    return sum;
}

RationalFunction G_u_coeff(std::uint64_t j) {
    if (j == 0) {
        throw std::invalid_argument("G_u_coeff requires j >= 1");
    }
    const auto jj = static_cast<unsigned>(j);
    return RationalFunction(Polynomial(ExactRational(6) * power(2, jj)),
                            one_minus(3) * Polynomial({4, -3}) * Polynomial(power(3, jj)) * one_minus(1).pow(jj));
}

SymmetricPair sigma_tau_symmetric() {
    return {Polynomial({0, ExactRational(3, 2)}), Polynomial(ExactRational(9, 4)) * t_var() * Polynomial({-1, 1})};
}

Polynomial girard_waring_power_sum(std::uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("power sum closed form requires m >= 1");
    }
    const auto [e, f] = sigma_tau_symmetric();
    const auto mm = static_cast<i64>(m);
    Polynomial out;
    for (i64 k = 0; 2 * k <= mm; ++k) {
        const ExactRational c = sign_of(k) * binom_general(mm - k, k) * ExactRational(mm) / ExactRational(mm - k);
        out += Polynomial(c) * f.pow(static_cast<unsigned>(k)) * e.pow(static_cast<unsigned>(mm - 2 * k));
    }
    return out;
}

Polynomial girard_waring_quotient(std::uint64_t m) {
    const auto [e, f] = sigma_tau_symmetric();
    const auto mm = static_cast<i64>(m);
    Polynomial out;
    for (i64 k = 0; 2 * k <= mm - 1; ++k) {
        out += Polynomial(sign_of(k) * binom_general(mm - 1 - k, k)) * f.pow(static_cast<unsigned>(k)) *
               e.pow(static_cast<unsigned>(mm - 1 - 2 * k));
    }
    return out;
}

std::vector<IdentityResult> kernel_identities_check() {
    std::vector<IdentityResult> results;
    const Polynomial x = x_of_t();
    const auto [e, f] = sigma_tau_symmetric();

    {
        const RationalFunction u1(Polynomial(2), Polynomial({3, -3}));
        const RationalFunction kernel = RationalFunction(x) * u1.pow(3) - RationalFunction(Polynomial(3)) * u1 +
                                        RationalFunction(Polynomial(2));
        results.push_back({"kernel root U1 = 2/(3(1-t))", kernel.is_zero(),
                           describe({{"numerator", kernel.numerator()}})});
    }
    {
        // Coefficient lists in V.
        const Bivariate linear = {Polynomial(-3) * one_minus(1), Polynomial(2)};
        const Bivariate quadratic = {f, -e, Polynomial(1)};
        const Bivariate lhs = multiply(linear, quadratic);
        const Bivariate rhs = {x, Polynomial(0), Polynomial(-3), Polynomial(2)};
        std::vector<std::pair<std::string, Polynomial>> rem;
        bool ok = lhs.size() == rhs.size();
        for (std::size_t k = 0; k < std::max(lhs.size(), rhs.size()); ++k) {
            const Polynomial l = k < lhs.size() ? lhs[k] : Polynomial();
            const Polynomial r = k < rhs.size() ? rhs[k] : Polynomial();
            rem.emplace_back("V^" + std::to_string(k), l - r);
            ok = ok && (l == r);
        }
        results.push_back({"cubic factorization 2(V-3(1-t)/2)(V-sigma)(V-tau)", ok, describe(rem)});
    }
    {
        const Surd sigma{Polynomial({0, ExactRational(3, 4)}), Polynomial(ExactRational(-3, 4))};
        const Surd tau{Polynomial({0, ExactRational(3, 4)}), Polynomial(ExactRational(3, 4))};
        const Surd one{Polynomial(1), Polynomial()};
        // (1 - sigma U)(1 - tau U) = 1 - (sigma + tau) U + sigma tau U^2
        const std::vector<Surd> product = {one, Surd{} - (sigma + tau), sigma * tau};
        const std::vector<Polynomial> expected = {Polynomial(1), -e, f};
        std::vector<std::pair<std::string, Polynomial>> rem;
        bool ok = true;
        for (std::size_t k = 0; k < product.size(); ++k) {
            rem.emplace_back("U^" + std::to_string(k), product[k].a - expected[k]);
            rem.emplace_back("W*U^" + std::to_string(k), product[k].b);
            ok = ok && product[k].a == expected[k] && product[k].b.is_zero();
        }
        results.push_back({"quadratic factor (1-sigma U)(1-tau U)", ok, describe(rem)});
    }
    return results;
}

ExactRational closed_form_probability(const WalkModel& model, State state, std::uint64_t steps) {
    if (!model.is_balanced()) {
        throw std::invalid_argument("closed forms require the balanced probabilities");
    }
    if (model.kind() == ModelKind::DoubleLarge) {
        if (state.is_beta()) return steps % 3 == 1 ? fbeta_coeff((steps - 1) / 3) : ExactRational{};
        return theorem1_coeff(steps, state.index());
    }
    if (state.is_beta()) return steps % 3 == 2 ? gbeta_coeff((steps - 2) / 3) : ExactRational{};
    if (state.index() == 0) return steps % 3 == 0 ? g0_coeff(steps / 3) : ExactRational{};
    return theorem2_coeff(steps, state.index());
}

}  // namespace knoedel
