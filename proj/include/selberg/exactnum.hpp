#pragma once

// Exact scalars: arbitrary-precision integers and canonical rationals, plus the
// rising factorial and binomial coefficient everything else is built from.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace selberg {

using Integer = mpz_class;

std::string to_string(const Integer& value);

/// Raised when text does not spell a rational. `position()` is the 0-based
/// offset of the first offending character.
class RationalParseError : public std::invalid_argument {
public:
    RationalParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Reduced fraction with positive denominator. Every constructor and operator
/// leaves the value canonical, so `==` is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    /// Throws std::domain_error when `denominator` is zero.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "p" or "p/q" (optional leading '-' or '+', decimal digits only).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

bool is_integer(const Rational& q);

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, long k);

/// C(r, s) for r, s >= 0, with C(r, s) = 0 for s > r.
/// Throws std::domain_error on a negative argument.
Integer binom(long r, long s);

/// Sums C(t, s) for t = s..r-1 term by term and compares with C(r, s+1).
/// Requires 0 <= s < r.
bool hockey_stick_check(long r, long s);

}  // namespace selberg
