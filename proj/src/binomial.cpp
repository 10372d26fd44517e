#include "knoedel/binomial.hpp"

namespace knoedel {

mpz_class binomial_integer(std::int64_t upper, std::int64_t lower) {
    if (lower < 0) {
        return 0;
    }
    // Falling factorial over b!, accumulated so that each partial quotient
    // prod_{i<k} (a-i) / k! stays an integer.
    mpz_class acc = 1;
    for (std::int64_t i = 0; i < lower; ++i) {
        const mpz_class factor(static_cast<long>(upper - i));
        if (factor == 0) {
            return 0;
        }
        acc *= factor;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    return acc;
}

}  // namespace knoedel
