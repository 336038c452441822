#pragma once

// Classification of an exponent configuration (m, g, lambda_1..lambda_n) of
//
//   prod_{i<j} (x_i - x_j)^g  prod_{i,k} (x_i - z_k)^{lambda_k}
//
// Resonant points are those j with 2 lambda_j + g integral; their count is r.
// The remaining divisor exponents must all be non-integral for the dimension
// formulas to apply:
//
//   point     k lambda_j + C(k,2) g        k = 1 and 3 <= k <= m, every j
//   infinity  k lambda_inf + C(k,2) g      1 <= k <= m
//   diagonal  C(k,2) g                     2 <= k <= m
//
// with lambda_inf = -sum lambda_j - (m-1) g. All tests are exact.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "selberg/dims.hpp"
#include "selberg/exactnum.hpp"

namespace selberg {

struct ExponentConfig {
    int m = 1;
    Rational g;
    std::vector<Rational> lambdas;

    friend bool operator==(const ExponentConfig&, const ExponentConfig&) = default;
};

enum class ExponentCondition { Point, Infinity, Diagonal };

const char* to_string(ExponentCondition c);

struct Violation {
    ExponentCondition condition;
    std::optional<int> j;  // 1-based point index, Point condition only
    int k = 0;
    Integer value;  // the integral exponent that was found

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ResonanceReport {
    std::vector<int> resonant_indices;  // 1-based, ascending
    int r = 0;
    Rational lambda_infinity;
    std::vector<Violation> violations;
    bool assumption_valid = true;
};

Rational lambda_infinity(const ExponentConfig& cfg);

/// Throws DomainError when m < 1 or lambdas is empty.
ResonanceReport classify(const ExponentConfig& cfg);

class AssumptionViolated : public std::runtime_error {
public:
    explicit AssumptionViolated(ResonanceReport report);
    const ResonanceReport& report() const noexcept { return report_; }

private:
    ResonanceReport report_;
};

struct ConfigDimensions {
    ResonanceReport report;
    DimensionRecord record;
};

/// classify, then compute_record(m, n, r). Throws AssumptionViolated when the
/// configuration has integral non-resonant exponents.
ConfigDimensions dims_for_config(const ExponentConfig& cfg);

}  // namespace selberg
