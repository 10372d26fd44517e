#include "knoedel/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace knoedel {

ExactRational::ExactRational(const mpq_class& value) : value_(value) {
    value_.canonicalize();
}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) {
        throw std::domain_error("zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational::ExactRational(long numerator, long denominator)
    : ExactRational(mpz_class(numerator), mpz_class(denominator)) {}

ExactRational ExactRational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::string s(part);
        if (s.empty() || s == "-" || s == "+") {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            }
        }
        if (s[0] == '+') s.erase(0, 1);
        return mpz_class(s, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactRational(parse_int(text));
    }
    const mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(text) + "'");
    }
    return ExactRational(parse_int(text.substr(0, slash)), den);
}

ExactRational ExactRational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    return ExactRational(mpq_class(value_.get_den(), value_.get_num()));
}

ExactRational ExactRational::pow(long exponent) const {
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime.
    ExactRational out;
    out.value_ = mpq_class(num, den);
    return out;
}

std::string ExactRational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactRational::to_decimal_string(int significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    if (is_zero()) return "0";
    // Enough binary precision for the requested decimal digits plus guard bits.
    const auto bits = static_cast<mp_bitcnt_t>(significant_digits * 4 + 64);
    mpf_class f(value_, bits);
    std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 64);
    int n = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
    if (n >= static_cast<int>(buf.size())) {
        buf.resize(static_cast<std::size_t>(n) + 1);
        gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
    }
    return std::string(buf.data());
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

ExactRational ExactRational::operator-() const {
    ExactRational out;
    out.value_ = -value_;
    return out;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
    return os << value.to_fraction_string();
}

}  // namespace knoedel
