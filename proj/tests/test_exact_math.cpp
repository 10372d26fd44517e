#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "knoedel/binomial.hpp"
#include "knoedel/polynomial.hpp"
#include "knoedel/rational.hpp"
#include "knoedel/series.hpp"

using namespace knoedel;

namespace {

ExactRational R(long n, long d = 1) { return ExactRational(n, d); }

// Pascal's triangle by repeated addition; the test-side oracle for b >= 0, a >= 0.
std::vector<std::vector<mpz_class>> pascal(int rows) {
    std::vector<std::vector<mpz_class>> t(rows, std::vector<mpz_class>(rows, 0));
    for (int a = 0; a < rows; ++a) {
        t[a][0] = 1;
        for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    std::vector<ExactRational> c;
    for (std::size_t k = 0; k < order; ++k) c.push_back(R(num(rng), den(rng)));
    return TruncatedSeries(c, order);
}

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("canonical form") {
        const ExactRational a(6, -4);
        CHECK(a.numerator() == -3);
        CHECK(a.denominator() == 2);
        CHECK(a == R(-3, 2));
        CHECK(a.to_fraction_string() == "-3/2");
        CHECK(ExactRational(5).to_fraction_string() == "5/1");
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(ExactRational(1, 0), std::domain_error);
        CHECK_THROWS_AS(R(1) / R(0), std::domain_error);
        CHECK_THROWS_AS(R(0).reciprocal(), std::domain_error);
        CHECK_THROWS_AS(ExactRational::parse("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(ExactRational::parse("x"), std::invalid_argument);
        CHECK_THROWS_AS(ExactRational::parse("1/"), std::invalid_argument);
    }

    TEST_CASE("parse round-trips the fraction string") {
        for (const auto& v : {R(16, 27), R(-4), R(0), R(672, 2187)}) {
            CHECK(ExactRational::parse(v.to_fraction_string()) == v);
        }
        CHECK(ExactRational::parse("+2/4") == R(1, 2));
    }

    TEST_CASE("exactness properties") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> num(-1000, 1000), den(1, 999);
        for (int i = 0; i < 500; ++i) {
            const ExactRational a = R(num(rng), den(rng)), b = R(num(rng), den(rng));
            CHECK((a + b) - b == a);
            if (!a.is_zero()) CHECK(a * a.reciprocal() == R(1));
        }
    }

    TEST_CASE("pow and decimal rendering") {
        CHECK(R(2, 3).pow(3) == R(8, 27));
        CHECK(R(2, 3).pow(-2) == R(9, 4));
        CHECK(R(16, 27).to_decimal_string(12) == "0.592592592593");
        CHECK(R(1).to_decimal_string(12) == "1");
        CHECK(R(0).to_decimal_string() == "0");
    }
}

TEST_SUITE("binomial") {
    TEST_CASE("examples") {
        CHECK(binom_general(0, 0) == R(1));
        CHECK(binom_general(-4, 1) == R(-4));
        CHECK(binom_general(5, 2) == R(10));
        CHECK(binom_general(3, -1) == R(0));
        CHECK(binom_general(2, 5) == R(0));
        CHECK(binom_general(-2, 0) == R(1));
    }

    TEST_CASE("agrees with Pascal's triangle for non-negative arguments") {
        const auto t = pascal(60);
        for (int a = 0; a < 60; ++a) {
            for (int b = 0; b <= a; ++b) REQUIRE(binomial_integer(a, b) == t[a][b]);
        }
    }

    TEST_CASE("negative upper index follows the reflection C(-a,b) = (-1)^b C(a+b-1,b)") {
        const auto t = pascal(80);
        for (int a = 1; a < 40; ++a) {
            for (int b = 0; b < 40; ++b) {
                const mpz_class want = (b % 2 == 0 ? 1 : -1) * t[a + b - 1][b];
                REQUIRE(binomial_integer(-a, b) == want);
            }
        }
    }

    TEST_CASE("Pascal recurrence holds for every integer upper index") {
        for (long a = -30; a <= 30; ++a) {
            for (long b = 1; b <= 25; ++b) {
                REQUIRE(binom_general(a, b) == binom_general(a - 1, b - 1) + binom_general(a - 1, b));
            }
        }
    }
}

TEST_SUITE("series") {
    TEST_CASE("reciprocal of 1 - t is the geometric series") {
        const TruncatedSeries one_minus_t({1, -1}, 3);
        CHECK(series_recip(one_minus_t) == TruncatedSeries({1, 1, 1}, 3));
        const TruncatedSeries geom(std::vector<ExactRational>(10, R(1)), 10);
        CHECK(series_mul(TruncatedSeries({1, -1}, 10), geom) == TruncatedSeries::constant(1, 10));
    }

    TEST_CASE("zero is the additive identity") {
        std::mt19937_64 rng(1);
        const auto s = random_series(rng, 8);
        CHECK(series_add(s, TruncatedSeries(8)) == s);
    }

    TEST_CASE("results carry the smaller order") {
        const TruncatedSeries a({1, 2, 3, 4}, 4), b({1, 1}, 2);
        CHECK(series_add(a, b).order() == 2);
        CHECK(series_mul(a, b).order() == 2);
    }

    TEST_CASE("reciprocal of a non-unit") {
        CHECK_THROWS_WITH_AS(series_recip(TruncatedSeries({0, 1}, 4)), "not a unit", SeriesError);
    }

    TEST_CASE("composition") {
        // t^2 with t = x + x^2
        const TruncatedSeries t_squared({0, 0, 1}, 5);
        const TruncatedSeries inner({0, 1, 1}, 5);
        CHECK(series_compose(t_squared, inner) == TruncatedSeries({0, 0, 1, 2, 1}, 5));
        // composing with zero leaves the constant term
        const TruncatedSeries s({R(3, 2), 5, 7}, 3);
        CHECK(series_compose(s, TruncatedSeries(3)) == TruncatedSeries::constant(R(3, 2), 3));
        CHECK_THROWS_AS(series_compose(s, TruncatedSeries({1, 1}, 3)), SeriesError);
    }

    TEST_CASE("reversion of the identity and invalid input") {
        CHECK(series_reversion(TruncatedSeries::variable(6)) == TruncatedSeries::variable(6));
        CHECK_THROWS_WITH_AS(series_reversion(TruncatedSeries({1, 1}, 4)), "not invertible as formal series", SeriesError);
        CHECK_THROWS_WITH_AS(series_reversion(TruncatedSeries({0, 0, 1}, 4)), "not invertible as formal series", SeriesError);
    }

    TEST_CASE("reversion of x = (27/4) t (1-t)^2") {
        const std::size_t order = 30;
        const TruncatedSeries x({0, R(27, 4), R(-27, 2), R(27, 4)}, order);
        const auto r = series_reversion(x);
        CHECK(r[1] == R(4, 27));
        CHECK(series_compose(x, r) == TruncatedSeries::variable(order));
        CHECK(series_compose(r, x) == TruncatedSeries::variable(order));
    }

    TEST_CASE("reversion is a two-sided inverse on random series") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            auto s = random_series(rng, 9);
            s[0] = 0;
            if (s[1].is_zero()) s[1] = 1;
            const auto r = series_reversion(s);
            CHECK(series_compose(s, r) == TruncatedSeries::variable(9));
            CHECK(series_compose(r, s) == TruncatedSeries::variable(9));
        }
    }

    TEST_CASE("multiplication is commutative and associative") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_series(rng, 7), b = random_series(rng, 7), c = random_series(rng, 7);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_SUITE("polynomial") {
    TEST_CASE("arithmetic and trimming") {
        const Polynomial t = Polynomial::variable();
        const Polynomial p = (Polynomial(1) - t) * (Polynomial(1) + t);
        CHECK(p == Polynomial({1, 0, -1}));
        CHECK((p - p).is_zero());
        CHECK((p - p).degree() == -1);
        CHECK(p.evaluate(R(1, 2)) == R(3, 4));
        CHECK(t.pow(5).degree() == 5);
    }

    TEST_CASE("rational function equality is by cross-multiplication") {
        const RationalFunction a(Polynomial({1, -1}), Polynomial({1, -1}).pow(2));
        const RationalFunction b(Polynomial(1), Polynomial({1, -1}));
        CHECK(a == b);
        CHECK((a - b).is_zero());
        CHECK_THROWS_AS(RationalFunction(Polynomial(1), Polynomial()), std::domain_error);
    }

    TEST_CASE("rational function composition") {
        // 1/(1-t) at t = x is the geometric series
        const RationalFunction g(Polynomial(1), Polynomial({1, -1}));
        CHECK(g.compose(TruncatedSeries::variable(5)) == TruncatedSeries(std::vector<ExactRational>(5, R(1)), 5));
    }
}
