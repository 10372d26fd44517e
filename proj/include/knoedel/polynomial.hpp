#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "knoedel/rational.hpp"
#include "knoedel/series.hpp"

namespace knoedel {

/// Dense univariate polynomial over ExactRational, kept trimmed (no trailing
/// zero coefficients; the zero polynomial has no coefficients).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<ExactRational> coeffs);
    Polynomial(std::initializer_list<ExactRational> coeffs);
    Polynomial(const ExactRational& c) : Polynomial(std::vector<ExactRational>{c}) {}
    Polynomial(long c) : Polynomial(ExactRational(c)) {}

    /// The monomial t.
    static Polynomial variable();

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    ExactRational coeff(std::size_t k) const;
    std::span<const ExactRational> coefficients() const { return coeffs_; }

    Polynomial pow(unsigned exponent) const;
    ExactRational evaluate(const ExactRational& at) const;
    /// The polynomial as a series in its own variable.
    TruncatedSeries to_series(std::size_t order) const { return TruncatedSeries(coeffs_, order); }
    /// Substitute a formal series for the variable.
    TruncatedSeries compose(const TruncatedSeries& inner) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<ExactRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Quotient of two polynomials in t. Not reduced; equality is by
/// cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}
    /// Throws std::domain_error on a zero denominator.
    RationalFunction(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction pow(unsigned exponent) const;

    /// Expand after substituting a series with zero constant term; the
    /// denominator must not vanish at t = 0.
    TruncatedSeries compose(const TruncatedSeries& inner) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace knoedel
