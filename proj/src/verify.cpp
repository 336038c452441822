#include "selberg/verify.hpp"

#include <sstream>

#include "selberg/dims.hpp"
#include "selberg/hyper.hpp"

namespace selberg {
namespace {

// Bound on draws per requested case before a randomized suite gives up.
constexpr long kMaxDrawsPerCase = 1000;

void record(SuiteReport& rep, bool pass, const std::string& description) {
    if (pass) {
        ++rep.passed;
    } else {
        ++rep.failed;
        if (!rep.first_counterexample) rep.first_counterexample = description;
    }
}

std::string abc_text(const Rational& a, const Rational& b, const Rational& c, const char* idx,
                     long j) {
    std::ostringstream os;
    os << "a=" << a << " b=" << b << " c=" << c << ' ' << idx << '=' << j;
    return os.str();
}

// Draws until `cases` defined evaluations have been checked.
template <typename Draw>
void randomized(SuiteReport& rep, long cases, Draw&& draw) {
    for (long draws = 0; rep.passed + rep.failed < cases; ++draws) {
        if (draws >= cases * kMaxDrawsPerCase) {
            ++rep.failed;
            if (!rep.first_counterexample) rep.first_counterexample = "too many undefined draws";
            return;
        }
        draw();
    }
}

void run_pfaff(SuiteReport& rep, std::uint64_t seed, long cases) {
    SuiteRng rng(seed);
    randomized(rep, cases, [&] {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        long j = rng.uniform(1, 8);
        auto ok = pfaff_saalschutz_check(a, b, c, j);
        if (!ok) {
            ++rep.skipped;
            return;
        }
        record(rep, *ok, abc_text(a, b, c, "j", j));
    });
}

void run_contiguity(SuiteReport& rep, std::uint64_t seed, long cases) {
    SuiteRng rng(seed);
    randomized(rep, cases, [&] {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        long j = rng.uniform(0, 10);
        auto residual = contiguity_residual(a, b, c, j);
        if (!residual) {
            ++rep.skipped;
            return;
        }
        record(rep, residual->is_zero(),
               abc_text(a, b, c, "j", j) + " residual=" + residual->to_string());
    });
}

void run_pochhammer(SuiteReport& rep, std::uint64_t seed, long cases) {
    SuiteRng rng(seed);
    for (long i = 0; i < cases; ++i) {
        Rational a = rng.rational(), b = rng.rational();
        long k = rng.uniform(0, 10);
        Rational residual = pochhammer_identity_residual(a, b, k);
        std::ostringstream os;
        os << "a=" << a << " b=" << b << " k=" << k << " residual=" << residual;
        record(rep, residual.is_zero(), os.str());
    }
}

void run_hockey(SuiteReport& rep) {
    for (long r = 1; r <= 40; ++r)
        for (long s = 0; s < r; ++s)
            record(rep, hockey_stick_check(r, s), "r=" + std::to_string(r) + " s=" + std::to_string(s));
}

std::string query_text(int m, int n, int r) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
}

void run_routes(SuiteReport& rep) {
    for (int m = 1; m <= 8; ++m) {
        for (int n = 2; n <= 10; ++n) {
            for (int r = 0; r <= n; ++r) {
                DimensionRecord rec = compute_record({m, n, r});
                bool integral_hyp = rec.I_hyp && rec.I_hyp->is_integer();
                bool additive = rec.D == rec.K_recursion + rec.I_sum &&
                                rec.D == rec.K_descent + rec.I_sum &&
                                rec.D == rec.K_closed + rec.I_sum;
                record(rep, rec.routes_agree && integral_hyp && additive, query_text(m, n, r));
            }
        }
    }
}

void run_full_resonance(SuiteReport& rep) {
    for (int m = 2; m <= 8; ++m) {
        for (int n = m; n <= 12; ++n) {
            FullResonanceValues closed = full_resonance_values(m, n);
            bool pass = dim_I_sum(m, n, n) == closed.at_n &&
                        dim_I_sum(m, n, n - 1) == closed.at_n_minus_1 &&
                        full_resonance_product_form(m, n) == Rational(closed.at_n);
            record(rep, pass, "m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
}

}  // namespace

const char* to_string(Suite s) {
    switch (s) {
        case Suite::Pfaff: return "pfaff";
        case Suite::Contiguity: return "contiguity";
        case Suite::Pochhammer: return "pochhammer";
        case Suite::Hockey: return "hockey";
        case Suite::Routes: return "routes";
        case Suite::FullResonance: return "theorem2";
    }
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : all_suites())
        if (name == to_string(s)) return s;
    return std::nullopt;
}

std::vector<Suite> all_suites() {
    return {Suite::Pfaff, Suite::Contiguity, Suite::Pochhammer,
            Suite::Hockey, Suite::Routes,     Suite::FullResonance};
}

long SuiteRng::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational SuiteRng::rational(long max_abs_numerator, long max_denominator) {
    long num = uniform(-max_abs_numerator, max_abs_numerator);
    long den = uniform(1, max_denominator);
    return Rational(Integer(num), Integer(den));
}

long default_cases(Suite s) {
    switch (s) {
        case Suite::Pfaff: return 500;
        case Suite::Contiguity:
        case Suite::Pochhammer: return 200;
        default: return 0;
    }
}

SuiteReport run_suite(Suite s, std::uint64_t seed, long cases) {
    SuiteReport rep;
    rep.suite = s;
    switch (s) {
        case Suite::Pfaff:
        case Suite::Contiguity:
        case Suite::Pochhammer:
            if (cases < 1) throw std::invalid_argument("verify: cases must be >= 1");
            rep.seed = seed;
            rep.requested = cases;
            break;
        default: rep.exhaustive = true;
    }
    switch (s) {
        case Suite::Pfaff: run_pfaff(rep, seed, cases); break;
        case Suite::Contiguity: run_contiguity(rep, seed, cases); break;
        case Suite::Pochhammer: run_pochhammer(rep, seed, cases); break;
        case Suite::Hockey: run_hockey(rep); break;
        case Suite::Routes: run_routes(rep); break;
        case Suite::FullResonance: run_full_resonance(rep); break;
    }
    return rep;
}

Json to_json(const SuiteReport& rep) {
    Json out;
    out["suite"] = to_string(rep.suite);
    out["mode"] = rep.exhaustive ? "exhaustive" : "random";
    if (!rep.exhaustive) {
        out["seed"] = rep.seed;
        out["cases"] = rep.requested;
    }
    out["passed"] = rep.passed;
    out["failed"] = rep.failed;
    out["skipped"] = rep.skipped;
    out["first_counterexample"] =
        rep.first_counterexample ? Json(*rep.first_counterexample) : Json(nullptr);
    out["ok"] = rep.ok();
    return out;
}

std::string suite_csv_header() { return "suite,mode,seed,cases,passed,failed,skipped,ok,first_counterexample"; }

std::string to_csv_row(const SuiteReport& rep) {
    std::ostringstream os;
    os << to_string(rep.suite) << ',' << (rep.exhaustive ? "exhaustive" : "random") << ',';
    if (!rep.exhaustive) os << rep.seed;
    os << ',';
    if (!rep.exhaustive) os << rep.requested;
    os << ',' << rep.passed << ',' << rep.failed << ',' << rep.skipped << ','
       << (rep.ok() ? "true" : "false") << ',' << rep.first_counterexample.value_or("");
    return os.str();
}

std::string render_pretty(const SuiteReport& rep) {
    std::ostringstream os;
    os << to_string(rep.suite) << ": " << (rep.ok() ? "PASS" : "FAIL") << "  passed=" << rep.passed
       << " failed=" << rep.failed << " skipped=" << rep.skipped;
    if (rep.exhaustive)
        os << " (exhaustive)";
    else
        os << " (seed=" << rep.seed << " cases=" << rep.requested << ')';
    os << '\n';
    if (rep.first_counterexample) os << "  first counterexample: " << *rep.first_counterexample << '\n';
    return os.str();
}

}  // namespace selberg
