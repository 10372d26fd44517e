#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "knoedel/rational.hpp"

namespace knoedel {

inline constexpr std::size_t kDefaultSeriesOrder = 32;

/// Raised when a formal-series operation's precondition fails
/// ("not a unit", "not invertible as formal series", ...).
class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Formal power series over ExactRational, truncated to `order` terms.
///
/// Coefficient k is the coefficient of x^k for k in [0, order). Binary
/// operations return a series whose order is the smaller of the two operand
/// orders; nothing past that point is ever read.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    /// Zero series with the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
    /// Takes the first `order` entries of `coeffs`, zero-padding if short.
    TruncatedSeries(std::vector<ExactRational> coeffs, std::size_t order);
    TruncatedSeries(std::initializer_list<ExactRational> coeffs, std::size_t order);

    /// The series x, truncated at `order`.
    static TruncatedSeries variable(std::size_t order);
    static TruncatedSeries constant(const ExactRational& c, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const ExactRational& operator[](std::size_t k) const { return coeffs_.at(k); }
    ExactRational& operator[](std::size_t k) { return coeffs_.at(k); }
    std::span<const ExactRational> coefficients() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<ExactRational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const ExactRational& c);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse. Throws SeriesError("not a unit") if a[0] == 0.
TruncatedSeries series_recip(const TruncatedSeries& a);

/// outer(inner(x)). The inner constant term must vanish; the result order is
/// min(outer.order(), inner.order()).
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse r with s(r(x)) = x to the order of s.
/// Requires s[0] == 0 and s[1] != 0.
TruncatedSeries series_reversion(const TruncatedSeries& s);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

}  // namespace knoedel
