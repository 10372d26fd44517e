#pragma once

#include <cstdint>

#include "knoedel/rational.hpp"

namespace knoedel {

/// Binomial coefficient for any integer upper index.
///
/// C(a, b) = a (a-1) ... (a-b+1) / b!  for b >= 0, and 0 for b < 0.
/// Negative `upper` is allowed; C(-4, 1) = -4.
mpz_class binomial_integer(std::int64_t upper, std::int64_t lower);

inline ExactRational binom_general(std::int64_t upper, std::int64_t lower) {
    return ExactRational(binomial_integer(upper, lower));
}

}  // namespace knoedel
