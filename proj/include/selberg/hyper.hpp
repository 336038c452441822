#pragma once

// Terminating 3F2 series over exact rationals, and the classical identities
// (Pfaff-Saalschutz, a three-term contiguity relation and the Pochhammer
// identity behind it) used to collapse them.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "selberg/exactnum.hpp"

namespace selberg {

enum class HypErrorKind {
    NonTerminating,         // no upper parameter is a non-positive integer
    PoleBeforeTermination,  // a lower Pochhammer vanished while the numerator did not
    ZeroDenominator,        // a closed-form right-hand side divides by zero
};

struct HypError {
    HypErrorKind kind;
    long index = -1;  // series index k of the pole, or -1 when not applicable

    std::string message() const;
    friend bool operator==(const HypError&, const HypError&) = default;
};

const char* to_string(HypErrorKind kind);

class BadHypAccess : public std::logic_error {
public:
    explicit BadHypAccess(const HypError& e)
        : std::logic_error("accessed value of failed evaluation: " + e.message()) {}
};

/// Either a value or the reason evaluation was undefined.
template <typename T>
class HypResult {
public:
    HypResult(T value) : state_(std::move(value)) {}
    HypResult(HypError error) : state_(error) {}

    bool has_value() const { return state_.index() == 0; }
    explicit operator bool() const { return has_value(); }

    const T& value() const {
        if (!has_value()) throw BadHypAccess(error());
        return std::get<0>(state_);
    }
    const T& operator*() const { return value(); }
    const T* operator->() const { return &value(); }
    const HypError& error() const { return std::get<1>(state_); }

private:
    std::variant<T, HypError> state_;
};

struct HypParams3F2 {
    std::array<Rational, 3> upper;
    std::array<Rational, 2> lower;
    Rational argument{1};
};

/// Every term of a terminating 3F2, k = 0 up to (excluding) the first k
/// where the upper Pochhammer product vanishes. At each k the numerator is
/// tested before the denominator, so a simultaneous zero means termination.
HypResult<std::vector<Rational>> terminating_3f2_terms(const HypParams3F2& p);

HypResult<Rational> eval_terminating_3f2(const HypParams3F2& p);

/// (c-a)_j (c-b)_j / ((c)_j (c-a-b)_j).
HypResult<Rational> pfaff_saalschutz_rhs(const Rational& a, const Rational& b, const Rational& c,
                                         long j);

/// 3F2(a, b, -j; c, 1+a+b-c-j; 1) against its closed form.
HypResult<bool> pfaff_saalschutz_check(const Rational& a, const Rational& b, const Rational& c,
                                       long j);

/// (b-a) F(a,b) + a F(a+1,b) - b F(a,b+1) where
/// F(a,b) = 3F2(a, b, -j; c, a+b-c+2-j; 1). Zero whenever defined.
HypResult<Rational> contiguity_residual(const Rational& a, const Rational& b, const Rational& c,
                                        long j);

/// a (a+1)_k (b)_k - b (a)_k (b+1)_k - (a-b) (a)_k (b)_k. Always zero.
Rational pochhammer_identity_residual(const Rational& a, const Rational& b, long k);

}  // namespace selberg
