#include "selberg/resonance.hpp"

namespace selberg {
namespace {

// C(k,2) as a rational, with C(1,2) = 0.
Rational pair_count(int k) { return Rational(binom(k, 2)); }

}  // namespace

const char* to_string(ExponentCondition c) {
    switch (c) {
        case ExponentCondition::Point: return "point";
        case ExponentCondition::Infinity: return "infinity";
        case ExponentCondition::Diagonal: return "diagonal";
    }
    return "unknown";
}

Rational lambda_infinity(const ExponentConfig& cfg) {
    Rational sum;
    for (const auto& l : cfg.lambdas) sum += l;
    return -sum - Rational(cfg.m - 1) * cfg.g;
}

ResonanceReport classify(const ExponentConfig& cfg) {
    if (cfg.m < 1) throw DomainError("exponent config: m must be >= 1");
    if (cfg.lambdas.empty()) throw DomainError("exponent config: lambdas must be non-empty");

    ResonanceReport rep;
    rep.lambda_infinity = lambda_infinity(cfg);

    for (std::size_t idx = 0; idx < cfg.lambdas.size(); ++idx) {
        if (is_integer(Rational(2) * cfg.lambdas[idx] + cfg.g))
            rep.resonant_indices.push_back(static_cast<int>(idx) + 1);
    }
    rep.r = static_cast<int>(rep.resonant_indices.size());

    for (std::size_t idx = 0; idx < cfg.lambdas.size(); ++idx) {
        for (int k = 1; k <= cfg.m; ++k) {
            if (k == 2) continue;
            Rational e = Rational(k) * cfg.lambdas[idx] + pair_count(k) * cfg.g;
            if (is_integer(e))
                rep.violations.push_back(
                    {ExponentCondition::Point, static_cast<int>(idx) + 1, k, e.numerator()});
        }
    }
    for (int k = 1; k <= cfg.m; ++k) {
        Rational e = Rational(k) * rep.lambda_infinity + pair_count(k) * cfg.g;
        if (is_integer(e))
            rep.violations.push_back({ExponentCondition::Infinity, std::nullopt, k, e.numerator()});
    }
    for (int k = 2; k <= cfg.m; ++k) {
        Rational e = pair_count(k) * cfg.g;
        if (is_integer(e))
            rep.violations.push_back({ExponentCondition::Diagonal, std::nullopt, k, e.numerator()});
    }

    rep.assumption_valid = rep.violations.empty();
    return rep;
}

AssumptionViolated::AssumptionViolated(ResonanceReport report)
    : std::runtime_error("exponent configuration violates the non-resonance assumptions (" +
                         std::to_string(report.violations.size()) + " integral exponents)"),
      report_(std::move(report)) {}

ConfigDimensions dims_for_config(const ExponentConfig& cfg) {
    ResonanceReport rep = classify(cfg);
    if (!rep.assumption_valid) throw AssumptionViolated(std::move(rep));
    const int n = static_cast<int>(cfg.lambdas.size());
    DimensionRecord rec = compute_record({cfg.m, n, rep.r});
    return {std::move(rep), std::move(rec)};
}

}  // namespace selberg
