#include "selberg/exactnum.hpp"

#include <cctype>
#include <ostream>

namespace selberg {

std::string to_string(const Integer& value) { return value.get_str(); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> RationalParseError {
        return RationalParseError("invalid rational \"" + std::string(text) + "\" at position " +
                                      std::to_string(pos) + ": " + why,
                                  pos);
    };
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out.push_back(text[pos++]);
        if (pos == start) throw fail("expected a digit");
    };

    std::string num;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') num.push_back('-');
        ++pos;
    }
    digits(num);
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den.clear();
        std::size_t den_start = pos;
        digits(den);
        if (Integer(den) == 0) {
            pos = den_start;
            throw fail("zero denominator");
        }
    }
    if (pos != text.size()) throw fail("unexpected character");
    return Rational(Integer(num), Integer(den));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

bool is_integer(const Rational& q) { return q.is_integer(); }

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::domain_error("pochhammer: negative length");
    Rational product(1);
    for (long i = 0; i < k; ++i) {
        product *= a + Rational(i);
        if (product.is_zero()) break;
    }
    return product;
}

Integer binom(long r, long s) {
    if (r < 0 || s < 0) throw std::domain_error("binom: negative argument");
    if (s > r) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(s));
    return out;
}

bool hockey_stick_check(long r, long s) {
    if (s < 0 || s >= r) throw std::domain_error("hockey_stick_check: need 0 <= s < r");
    Integer lhs = 0;
    for (long t = s; t < r; ++t) lhs += binom(t, s);
    return lhs == binom(r, s + 1);
}

}  // namespace selberg
