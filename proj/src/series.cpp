#include "knoedel/series.hpp"

#include <algorithm>

namespace knoedel {

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<ExactRational> coeffs, std::size_t order)
    : TruncatedSeries(std::vector<ExactRational>(coeffs), order) {}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    TruncatedSeries out(order);
    if (order > 1) out.coeffs_[1] = 1;
    return out;
}

TruncatedSeries TruncatedSeries::constant(const ExactRational& c, std::size_t order) {
    TruncatedSeries out(order);
    if (order > 0) out.coeffs_[0] = c;
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    return TruncatedSeries(std::vector<ExactRational>(coeffs_.begin(),
                                                      coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, coeffs_.size()))),
                           order);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < out.order(); ++k) out[k] = a[k] + b[k];
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < out.order(); ++k) out[k] = a[k] - b[k];
    return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const ExactRational& c) {
    TruncatedSeries out(a.order());
    for (std::size_t k = 0; k < out.order(); ++k) out[k] = a[k] * c;
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < order; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

TruncatedSeries series_recip(const TruncatedSeries& a) {
    if (a.order() == 0) return a;
    if (a[0].is_zero()) {
        throw SeriesError("not a unit");
    }
    const ExactRational inv0 = a[0].reciprocal();
    TruncatedSeries out(a.order());
    out[0] = inv0;
    for (std::size_t k = 1; k < a.order(); ++k) {
        ExactRational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (!a[i].is_zero()) acc += a[i] * out[k - i];
        }
        out[k] = -acc * inv0;
    }
    return out;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.order() > 0 && !inner[0].is_zero()) {
        throw SeriesError("inner series must have zero constant term");
    }
    const std::size_t order = std::min(outer.order(), inner.order());
    if (order == 0) return TruncatedSeries(0);
    const TruncatedSeries in = inner.truncated(order);
    // Horner: (...((c_{n-1}) * in + c_{n-2}) * in + ...) + c_0.
    TruncatedSeries acc(order);
    for (std::size_t k = order; k-- > 0;) {
        acc = series_mul(acc, in);
        acc[0] += outer[k];
    }
    return acc;
}

TruncatedSeries series_reversion(const TruncatedSeries& s) {
    if (s.order() < 2 || !s[0].is_zero() || s[1].is_zero()) {
        throw SeriesError("not invertible as formal series");
    }
    const std::size_t order = s.order();
    const ExactRational inv1 = s[1].reciprocal();
    // Solve order by order: with r correct through x^{k-1}, the x^k coefficient
    // of s(r) is s1*r_k + (terms in lower r_i), so one correction fixes it.
    TruncatedSeries r(order);
    r[1] = inv1;
    for (std::size_t k = 2; k < order; ++k) {
        const TruncatedSeries probe = series_compose(s.truncated(k + 1), r.truncated(k + 1));
        r[k] = -probe[k] * inv1;
    }
    return r;
}

}  // namespace knoedel
