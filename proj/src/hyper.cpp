#include "selberg/hyper.hpp"

#include <algorithm>

namespace selberg {
namespace {

bool is_nonpositive_integer(const Rational& q) { return q.is_integer() && q.sign() <= 0; }

}  // namespace

const char* to_string(HypErrorKind kind) {
    switch (kind) {
        case HypErrorKind::NonTerminating: return "NonTerminating";
        case HypErrorKind::PoleBeforeTermination: return "PoleBeforeTermination";
        case HypErrorKind::ZeroDenominator: return "ZeroDenominator";
    }
    return "Unknown";
}

std::string HypError::message() const {
    std::string out = to_string(kind);
    if (index >= 0) out += " at k=" + std::to_string(index);
    return out;
}

HypResult<std::vector<Rational>> terminating_3f2_terms(const HypParams3F2& p) {
    if (std::none_of(p.upper.begin(), p.upper.end(), is_nonpositive_integer))
        return HypError{HypErrorKind::NonTerminating};

    std::vector<Rational> terms;
    Rational term(1);
    for (long k = 0;; ++k) {
        if (k > 0) {
            // term_k = term_{k-1} * prod(alpha+k-1) / (prod(beta+k-1) * k) * x
            const Rational shift(k - 1);
            Rational numer = (p.upper[0] + shift) * (p.upper[1] + shift) * (p.upper[2] + shift);
            if (numer.is_zero()) break;
            Rational denom = (p.lower[0] + shift) * (p.lower[1] + shift);
            if (denom.is_zero()) return HypError{HypErrorKind::PoleBeforeTermination, k};
            term *= numer * p.argument;
            term /= denom * Rational(k);
        }
        terms.push_back(term);
    }
    return terms;
}

HypResult<Rational> eval_terminating_3f2(const HypParams3F2& p) {
    auto terms = terminating_3f2_terms(p);
    if (!terms) return terms.error();
    Rational sum;
    for (const auto& t : *terms) sum += t;
    return sum;
}

HypResult<Rational> pfaff_saalschutz_rhs(const Rational& a, const Rational& b, const Rational& c,
                                         long j) {
    Rational denom = pochhammer(c, j) * pochhammer(c - a - b, j);
    if (denom.is_zero()) return HypError{HypErrorKind::ZeroDenominator};
    return pochhammer(c - a, j) * pochhammer(c - b, j) / denom;
}

HypResult<bool> pfaff_saalschutz_check(const Rational& a, const Rational& b, const Rational& c,
                                       long j) {
    HypParams3F2 p{{a, b, Rational(-j)}, {c, Rational(1) + a + b - c - Rational(j)}, Rational(1)};
    auto lhs = eval_terminating_3f2(p);
    if (!lhs) return lhs.error();
    auto rhs = pfaff_saalschutz_rhs(a, b, c, j);
    if (!rhs) return rhs.error();
    return *lhs == *rhs;
}

HypResult<Rational> contiguity_residual(const Rational& a, const Rational& b, const Rational& c,
                                        long j) {
    const Rational minus_j(-j);
    const std::array<Rational, 2> lower{c, a + b - c + Rational(2) - Rational(j)};
    auto f = eval_terminating_3f2({{a, b, minus_j}, lower, Rational(1)});
    if (!f) return f.error();
    auto f_a = eval_terminating_3f2({{a + Rational(1), b, minus_j}, lower, Rational(1)});
    if (!f_a) return f_a.error();
    auto f_b = eval_terminating_3f2({{a, b + Rational(1), minus_j}, lower, Rational(1)});
    if (!f_b) return f_b.error();
    return (b - a) * *f + a * *f_a - b * *f_b;
}

Rational pochhammer_identity_residual(const Rational& a, const Rational& b, long k) {
    const Rational one(1);
    return a * pochhammer(a + one, k) * pochhammer(b, k) -
           b * pochhammer(a, k) * pochhammer(b + one, k) -
           (a - b) * pochhammer(a, k) * pochhammer(b, k);
}

}  // namespace selberg
