#include "selberg/dims.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <tuple>

namespace selberg {
namespace {

using Key = std::tuple<int, int, int>;

// Idempotent concurrent cache: racing writers store the same value.
class MemoTable {
public:
    std::optional<Integer> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const Key& key, const Integer& value) {
        std::unique_lock lock(mutex_);
        values_.try_emplace(key, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Integer> values_;
};

MemoTable& recursion_memo() {
    static MemoTable table;
    return table;
}

MemoTable& descent_memo() {
    static MemoTable table;
    return table;
}

void check_route_args(int m, int n, int r) { validate(DimQuery{m, n, r}); }

// Bases shared by both recursive routes.
std::optional<Integer> k_base_case(int m, int r) {
    if (r == 0 || m == 1) return Integer(0);
    if (m == 2) return Integer(r);
    return std::nullopt;
}

Integer k_recursion_unchecked(int m, int n, int r) {
    if (auto base = k_base_case(m, r)) return *base;
    const Key key{m, n, r};
    if (auto hit = recursion_memo().find(key)) return *hit;
    Integer value = dim_D(m - 2, n) + k_recursion_unchecked(m, n, r - 1) -
                    k_recursion_unchecked(m - 2, n, r - 1);
    recursion_memo().insert(key, value);
    return value;
}

Integer k_descent_unchecked(int m, int n, int r) {
    if (auto base = k_base_case(m, r)) return *base;
    const Key key{m, n, r};
    if (auto hit = descent_memo().find(key)) return *hit;
    Integer value = Integer(r) * dim_D(m - 2, n);
    for (int t = 1; t < r; ++t) value -= k_descent_unchecked(m - 2, n, t);
    descent_memo().insert(key, value);
    return value;
}

Integer signed_binom_sum(int m, int n, int r, int s_first, int s_last, bool start_positive) {
    Integer sum = 0;
    bool positive = start_positive;
    for (int s = s_first; s <= s_last; ++s, positive = !positive) {
        Integer term = binom(r, s) * dim_D(m - 2 * s, n);
        if (positive)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

// n(n-1)...(n-count+1)
Rational falling_product(int n, int count) {
    Rational out(1);
    for (int i = 0; i < count; ++i) out *= Rational(n - i);
    return out;
}

Rational factorial(int k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(out);
}

}  // namespace

void validate(const DimQuery& q) {
    if (q.m < 1) throw DomainError("m must be >= 1, got " + std::to_string(q.m));
    if (q.n < 1) throw DomainError("n must be >= 1, got " + std::to_string(q.n));
    if (q.r < 0 || q.r > q.n)
        throw DomainError("r must satisfy 0 <= r <= n, got r=" + std::to_string(q.r) +
                          " with n=" + std::to_string(q.n));
}

Integer dim_D(int m, int n) {
    if (n < 1) throw DomainError("dim_D: n must be >= 1");
    if (m < 0) return 0;
    if (m == 0) return 1;
    return binom(n + m - 2, m);
}

Integer dim_K_recursion(int m, int n, int r) {
    check_route_args(m, n, r);
    return k_recursion_unchecked(m, n, r);
}

Integer dim_K_descent(int m, int n, int r) {
    check_route_args(m, n, r);
    return k_descent_unchecked(m, n, r);
}

Integer dim_K_closed(int m, int n, int r) {
    check_route_args(m, n, r);
    // C(r,s) = 0 beyond s = r and D(m-2s,n) = 0 beyond s = m/2.
    return signed_binom_sum(m, n, r, 1, std::min(r, m / 2), true);
}

Integer dim_I_sum(int m, int n, int r) {
    check_route_args(m, n, r);
    return signed_binom_sum(m, n, r, 0, m / 2, true);
}

HypResult<Rational> dim_I_hyp(int m, int n, int r) {
    check_route_args(m, n, r);
    const Rational half(1, 2);
    HypParams3F2 p{
        {Rational(-r), Rational(-m) * half, Rational(1 - m) * half},
        {Rational(2 - n - m) * half, Rational(3 - n - m) * half},
        Rational(1),
    };
    auto series = eval_terminating_3f2(p);
    if (!series) return series.error();
    return Rational(binom(n + m - 2, m)) * *series;
}

FullResonanceValues full_resonance_values(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("full_resonance_values: need m >= 1 and n >= 1");
    return {binom(n, m) - binom(n, m - 1), binom(n - 1, m)};
}

Rational full_resonance_product_form(int m, int n) {
    if (m < 2) throw DomainError("full_resonance_product_form: need m >= 2");
    const int j = m / 2;
    if (m % 2 == 0)
        return falling_product(n, 2 * j - 1) / factorial(2 * j) * Rational(n + 1 - 4 * j);
    return falling_product(n, 2 * j) / factorial(2 * j + 1) * Rational(n - 4 * j - 1);
}

DimensionRecord compute_record(const DimQuery& q) {
    validate(q);
    const auto [m, n, r] = q;
    DimensionRecord rec;
    rec.query = q;
    rec.D = dim_D(m, n);
    rec.K_recursion = dim_K_recursion(m, n, r);
    rec.K_descent = dim_K_descent(m, n, r);
    rec.K_closed = dim_K_closed(m, n, r);
    rec.I_sum = dim_I_sum(m, n, r);
    rec.I_subtract = rec.D - rec.K_closed;
    if (auto hyp = dim_I_hyp(m, n, r))
        rec.I_hyp = *hyp;
    else
        rec.I_hyp_error = hyp.error();

    const bool k_agree = rec.K_recursion == rec.K_descent && rec.K_descent == rec.K_closed;
    const bool i_agree = rec.I_hyp && *rec.I_hyp == Rational(rec.I_sum) &&
                         rec.I_sum == rec.I_subtract;
    rec.routes_agree = k_agree && i_agree;
    rec.in_validity_range =
        rec.D >= 0 && rec.K_closed >= 0 && rec.I_sum >= 0 && rec.K_closed <= rec.D;
    return rec;
}

std::vector<DimensionRecord> table(IntRange m_range, IntRange n_range, RPolicy policy) {
    auto check = [](IntRange range, const char* name) {
        if (range.lo < 1) throw DomainError(std::string(name) + " range must start at >= 1");
        if (range.hi < range.lo) throw DomainError(std::string(name) + " range is empty");
    };
    check(m_range, "m");
    check(n_range, "n");

    std::vector<DimQuery> queries;
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            switch (policy) {
                case RPolicy::All:
                    for (int r = 0; r <= n; ++r) queries.push_back({m, n, r});
                    break;
                case RPolicy::OnlyN: queries.push_back({m, n, n}); break;
                case RPolicy::OnlyNMinus1: queries.push_back({m, n, n - 1}); break;
            }
        }
    }

    std::vector<DimensionRecord> rows(queries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < queries.size(); i = next++) rows[i] = compute_record(queries[i]);
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(queries.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
    }
    return rows;
}

const char* to_string(RPolicy policy) {
    switch (policy) {
        case RPolicy::All: return "all";
        case RPolicy::OnlyN: return "only-n";
        case RPolicy::OnlyNMinus1: return "only-n-minus-1";
    }
    return "unknown";
}

}  // namespace selberg
