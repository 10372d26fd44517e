#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knoedel/polynomial.hpp"
#include "knoedel/rational.hpp"
#include "knoedel/series.hpp"
#include "knoedel/walk.hpp"

namespace knoedel {

/// Series in x. The substitution x = (27/4) t (1-t)^2 links the step variable
/// (x = z^3) to the uniformizing parameter t.

/// x as a polynomial in t.
Polynomial x_of_t();

/// t(x) from its explicit coefficient formula
/// [x^k] t = (1/k) C(3k-2, k-1) 2^{2k} / 3^{3k}.
TruncatedSeries t_series(std::size_t order = kDefaultSeriesOrder);

/// 1/(1-t) from [x^k] = C(3k, k) 2^{2k} / ((2k+1) 3^{3k}).
TruncatedSeries inv_one_minus_t_series(std::size_t order = kDefaultSeriesOrder);

/// The kernel root U1 = 2/(3(1-t)) from [x^k] = C(3k, k) 2^{2k+1} / ((2k+1) 3^{3k+1}).
/// Its constant term 2/3 is the limit of U1 as x -> 0.
TruncatedSeries u1_series(std::size_t order = kDefaultSeriesOrder);

/// f0 = 1/((1-t)(1-3t)), the double-large return-to-empty series in x.
TruncatedSeries f0_series(std::size_t order = kDefaultSeriesOrder);
/// g0 = 4/((1-3t)(4-3t)), the double-small return-to-empty series in x.
TruncatedSeries g0_series(std::size_t order = kDefaultSeriesOrder);

// --- double-large walk -----------------------------------------------------

/// Probability of state beta after 3n+1 steps:
/// 2^{2n+1} / 3^{3n+1} * C(3n+1, n).
ExactRational fbeta_coeff(std::uint64_t n);

/// Probability of box count j after n steps (0 off the residue class n+j = 0 mod 3).
///
/// With N = (n+j)/3:
///   (3/2)^j (4/27)^N (-1)^{N-j} * sum_k (-1)^k [ C(j-k,k) C(k-2N-2, N-j+k)
///                                             + 3 C(j-1-k,k) C(k-2N-1, N-j+k) ]
/// where the first sum runs over 0 <= k <= j/2 and the second over 0 <= k <= (j-1)/2.
ExactRational theorem1_coeff(std::uint64_t n, std::uint64_t j);

/// [U^m] F as a rational function of t over (1-3t)(1-t), where u = zU.
RationalFunction u_coeff_F(std::uint64_t m);

// --- double-small walk -----------------------------------------------------

/// Probability of state 0 after 3N steps.
ExactRational g0_coeff(std::uint64_t big_n);

/// Probability of beta after 3N+2 steps; equals (1/3) times the probability
/// of state 1 after 3N+1 steps.
ExactRational gbeta_coeff(std::uint64_t big_n);

/// Probability of box count j >= 1 after n steps (0 unless n = j mod 3, n >= j).
/// Throws std::invalid_argument for j == 0; state 0 has its own series (g0_coeff).
ExactRational theorem2_coeff(std::uint64_t n, std::uint64_t j);

/// [u^j] G / z^j = 6/((1-3t)(4-3t)) * (2/(3(1-t)))^j for j >= 1.
RationalFunction G_u_coeff(std::uint64_t j);

// --- symmetric functions of sigma, tau ------------------------------------

/// sigma + tau and sigma * tau as polynomials in t. sigma and tau themselves
/// involve sqrt(4t - 3t^2) and are never materialized.
struct SymmetricPair {
    Polynomial sum_e;   ///< (3/2) t
    Polynomial prod_f;  ///< (9/4) t (t-1)
};
SymmetricPair sigma_tau_symmetric();

/// sigma^m + tau^m via the closed Girard-Waring sum (m >= 1).
Polynomial girard_waring_power_sum(std::uint64_t m);
/// (tau^m - sigma^m)/(tau - sigma) via its closed sum (m >= 0; 0 at m = 0).
Polynomial girard_waring_quotient(std::uint64_t m);

struct IdentityResult {
    std::string name;
    bool passed = false;
    std::string detail;  ///< empty on success; otherwise the nonzero remainder
};

/// Kernel-root and factorization identities, each checked as an exact
/// polynomial identity in t:
///   (a) U1 = 2/(3(1-t)) annihilates x U^3 - 3U + 2;
///   (b) 2 (V - (3/2)(1-t)) (V^2 - eV + f) = 2V^3 - 3V^2 + x;
///   (c) (1 - sigma U)(1 - tau U) = 1 - (3/2) t U + (9/4) t (t-1) U^2,
///       computed in Q[t][W] / (W^2 - (4t - 3t^2)).
std::vector<IdentityResult> kernel_identities_check();

/// A single coefficient query answered by the closed forms.
/// Throws std::invalid_argument when the model is not at its balanced probabilities.
ExactRational closed_form_probability(const WalkModel& model, State state, std::uint64_t steps);

}  // namespace knoedel
