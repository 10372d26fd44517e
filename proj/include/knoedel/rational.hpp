#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace knoedel {

/// Arbitrary-precision rational in canonical form (denominator > 0, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and arithmetic
/// operator leaves the value canonicalized, so equality is structural.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}
    ExactRational(int value) : value_(static_cast<long>(value)) {}
    ExactRational(const mpz_class& value) : value_(value) {}
    explicit ExactRational(const mpq_class& value);

    /// Throws std::domain_error on a zero denominator.
    ExactRational(const mpz_class& numerator, const mpz_class& denominator);
    ExactRational(long numerator, long denominator);

    /// Parses "a", "-a" or "a/b". Throws std::invalid_argument on bad input.
    static ExactRational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    ExactRational reciprocal() const;
    ExactRational pow(long exponent) const;

    /// "num/den"; integers render as "num/1".
    std::string to_fraction_string() const;
    /// Decimal rendering with the given number of significant digits.
    std::string to_decimal_string(int significant_digits = 12) const;
    double to_double() const { return value_.get_d(); }

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    /// Throws std::domain_error on division by zero.
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

}  // namespace knoedel
