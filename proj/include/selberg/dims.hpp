#pragma once

// Dimension counts for the invariant twisted homology of the Selberg-type
// integrand with m integration variables, n points and r resonant exponents:
//
//   D(m,n)  total dimension, C(n+m-2, m)
//   K(m,n,r) kernel of the regularization map
//   I(m,n,r) image (regularizable cycles), with D = K + I
//
// K and I are each computed by several independent routes so they can be
// cross-checked. Closed-form sums use D(0,n) = 1 and D(m<0,n) = 0.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "selberg/exactnum.hpp"
#include "selberg/hyper.hpp"

namespace selberg {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct DimQuery {
    int m = 1;
    int n = 1;
    int r = 0;

    friend bool operator==(const DimQuery&, const DimQuery&) = default;
};

/// Throws DomainError unless m >= 1, n >= 1 and 0 <= r <= n.
void validate(const DimQuery& q);

struct DimensionRecord {
    DimQuery query;
    Integer D;
    Integer K_recursion;
    Integer K_descent;
    Integer K_closed;
    Integer I_sum;
    std::optional<Rational> I_hyp;      // empty when the 3F2 route failed
    std::optional<HypError> I_hyp_error;
    Integer I_subtract;
    bool routes_agree = false;
    bool in_validity_range = false;
};

/// C(n+m-2, m) for m >= 1; 1 for m = 0; 0 for m < 0.
Integer dim_D(int m, int n);

/// K(m,n,r) = D(m-2,n) + K(m,n,r-1) - K(m-2,n,r-1), from the bases
/// K(m,n,0) = 0, K(1,n,r) = 0, K(2,n,r) = r. Memoized.
Integer dim_K_recursion(int m, int n, int r);

/// K(m,n,r) = r D(m-2,n) - sum_{t=1}^{r-1} K(m-2,n,t), recursing on m-2 down
/// to the same m in {1, 2} bases.
Integer dim_K_descent(int m, int n, int r);

/// sum_{s>=1} (-1)^(s-1) C(r,s) D(m-2s,n).
Integer dim_K_closed(int m, int n, int r);

/// sum_{s=0}^{floor(m/2)} (-1)^s C(r,s) D(m-2s,n).
Integer dim_I_sum(int m, int n, int r);

/// C(n+m-2, m) * 3F2(-r, -m/2, (1-m)/2; (2-n-m)/2, (3-n-m)/2; 1).
/// Kept rational so a non-integral value would be visible.
HypResult<Rational> dim_I_hyp(int m, int n, int r);

struct FullResonanceValues {
    Integer at_n;          // C(n,m) - C(n,m-1)
    Integer at_n_minus_1;  // C(n-1,m)

    friend bool operator==(const FullResonanceValues&, const FullResonanceValues&) = default;
};

/// Closed forms of I(m,n,n) and I(m,n,n-1). May be negative outside n >= 2m.
FullResonanceValues full_resonance_values(int m, int n);

/// Parity-split product for I(m,n,n), m >= 2:
///   m = 2j:   n(n-1)...(n-2j+2) / (2j)! * (n+1-4j)
///   m = 2j+1: n(n-1)...(n-2j+1) / (2j+1)! * (n-4j-1)
Rational full_resonance_product_form(int m, int n);

/// Runs every route. Disagreement and 3F2 failures are recorded, not thrown.
DimensionRecord compute_record(const DimQuery& q);

enum class RPolicy { All, OnlyN, OnlyNMinus1 };

struct IntRange {
    int lo = 1;
    int hi = 1;
};

/// One record per (m, n, r) in lexicographic order. Rows are computed
/// concurrently; the result order is fixed. Throws DomainError for empty
/// ranges or bounds below 1.
std::vector<DimensionRecord> table(IntRange m_range, IntRange n_range, RPolicy policy);

const char* to_string(RPolicy policy);

}  // namespace selberg
