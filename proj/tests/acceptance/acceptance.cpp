// Acceptance suite. Usage: acceptance <path-to-selberg-dims> <golden-dir> <work-dir>
//
// Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
// All comparisons are exact; the only numeric thresholds are wall-clock bounds.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "golden.hpp"
#include "selberg/dims.hpp"
#include "selberg/exactnum.hpp"
#include "selberg/resonance.hpp"
#include "selberg/serialize.hpp"
#include "selberg/verify.hpp"

namespace fs = std::filesystem;
using selberg::Integer;
using selberg::Rational;

namespace {

struct Context {
    fs::path cli;
    fs::path golden_dir;
    fs::path work_dir;
};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

struct ProcessResult {
    int code = -1;
    std::string out;
    std::string err;
};

ProcessResult run_cli(const Context& ctx, const std::vector<std::string>& args) {
    const fs::path out_file = ctx.work_dir / "acceptance_stdout.txt";
    const fs::path err_file = ctx.work_dir / "acceptance_stderr.txt";
    std::string cmd = quote(ctx.cli.string());
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " >" + quote(out_file.string()) + " 2>" + quote(err_file.string());
    int status = std::system(cmd.c_str());
    ProcessResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = golden::read_file(out_file);
    r.err = golden::read_file(err_file);
    return r;
}

std::string q3(int m, int n, int r) {
    std::ostringstream os;
    os << "(m,n,r)=(" << m << "," << n << "," << r << ")";
    return os.str();
}

// 1. K routes agree on 1<=m<=8, 2<=n<=10, 0<=r<=n.
Outcome k_routes(const Context&) {
    Outcome o;
    for (int m = 1; m <= 8; ++m)
        for (int n = 2; n <= 10; ++n)
            for (int r = 0; r <= n; ++r) {
                Integer a = selberg::dim_K_recursion(m, n, r);
                o.require(a == selberg::dim_K_descent(m, n, r) && a == selberg::dim_K_closed(m, n, r),
                          "K routes differ at " + q3(m, n, r));
            }
    return o;
}

// 2. I_sum = D - K_closed and I_hyp is an integer equal to I_sum.
Outcome i_routes(const Context&) {
    Outcome o;
    for (int m = 1; m <= 8; ++m)
        for (int n = 2; n <= 10; ++n)
            for (int r = 0; r <= n; ++r) {
                Integer i = selberg::dim_I_sum(m, n, r);
                o.require(i == selberg::dim_D(m, n) - selberg::dim_K_closed(m, n, r),
                          "I_sum != D - K at " + q3(m, n, r));
                auto hyp = selberg::dim_I_hyp(m, n, r);
                o.require(hyp.has_value(), "3F2 route undefined at " + q3(m, n, r));
                if (hyp) {
                    o.require(hyp->is_integer(), "I_hyp not integral at " + q3(m, n, r));
                    o.require(*hyp == Rational(i), "I_hyp != I_sum at " + q3(m, n, r));
                }
            }
    return o;
}

// 3. D = K + I for every route pairing.
Outcome additivity(const Context&) {
    Outcome o;
    for (int m = 1; m <= 8; ++m)
        for (int n = 2; n <= 10; ++n)
            for (int r = 0; r <= n; ++r) {
                auto rec = selberg::compute_record({m, n, r});
                for (const Integer* k : {&rec.K_recursion, &rec.K_descent, &rec.K_closed}) {
                    o.require(rec.D == *k + rec.I_sum && rec.D == *k + rec.I_subtract,
                              "D != K + I at " + q3(m, n, r));
                    o.require(rec.I_hyp && Rational(rec.D) == Rational(*k) + *rec.I_hyp,
                              "D != K + I_hyp at " + q3(m, n, r));
                }
            }
    return o;
}

// 4. Closed forms for r = n and r = n - 1 on 2<=m<=8, m<=n<=12.
Outcome closed_forms(const Context&) {
    Outcome o;
    for (int m = 2; m <= 8; ++m)
        for (int n = m; n <= 12; ++n) {
            auto v = selberg::full_resonance_values(m, n);
            o.require(selberg::dim_I_sum(m, n, n) == selberg::binom(n, m) - selberg::binom(n, m - 1),
                      "I(m,n,n) closed form at m=" + std::to_string(m) + " n=" + std::to_string(n));
            o.require(selberg::dim_I_sum(m, n, n - 1) == selberg::binom(n - 1, m),
                      "I(m,n,n-1) closed form at m=" + std::to_string(m) + " n=" + std::to_string(n));
            o.require(selberg::full_resonance_product_form(m, n) == Rational(v.at_n),
                      "product form at m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    return o;
}

// 5. K(2,n,r) = r, K(3,n,r) = r(n-1); I(4,5,3) = 8 by every route.
Outcome anchors(const Context&) {
    Outcome o;
    for (int n = 2; n <= 12; ++n)
        for (int r = 0; r <= n; ++r) {
            auto k2 = selberg::compute_record({2, n, r});
            auto k3 = selberg::compute_record({3, n, r});
            o.require(k2.K_recursion == r && k2.K_descent == r && k2.K_closed == r,
                      "K(2,n,r) != r at n=" + std::to_string(n));
            Integer want = r * (n - 1);
            o.require(k3.K_recursion == want && k3.K_descent == want && k3.K_closed == want,
                      "K(3,n,r) != r(n-1) at n=" + std::to_string(n));
        }
    // Hand summation: D(4,5) - C(3,1) D(2,5) + C(3,2) D(0,5) = 35 - 3*10 + 3*1.
    const Integer hand = 35 - 3 * 10 + 3 * 1;
    auto rec = selberg::compute_record({4, 5, 3});
    o.require(hand == 8, "hand summation");
    o.require(rec.I_sum == hand && rec.I_subtract == hand && rec.I_hyp && *rec.I_hyp == Rational(hand),
              "I(4,5,3) != 8 on some route");
    return o;
}

Outcome suite(selberg::Suite s, long cases, std::uint64_t seed, std::string& note) {
    Outcome o;
    auto rep = selberg::run_suite(s, seed, cases);
    o.require(rep.failed == 0, rep.first_counterexample.value_or("failure"));
    o.require(rep.exhaustive || rep.passed == cases, "fewer valid cases than requested");
    note = std::string(selberg::to_string(s)) + " passed=" + std::to_string(rep.passed) +
           " skipped=" + std::to_string(rep.skipped);
    return o;
}

// 6. Pfaff-Saalschutz on 500 seeded valid draws.
Outcome pfaff(const Context&) {
    std::string note;
    Outcome o = suite(selberg::Suite::Pfaff, 500, 7, note);
    if (o.pass) o.detail = note;
    return o;
}

// 7. Contiguity and Pochhammer residuals on 200 seeded draws each.
Outcome residuals(const Context&) {
    std::string a, b;
    Outcome o = suite(selberg::Suite::Contiguity, 200, 7, a);
    Outcome p = suite(selberg::Suite::Pochhammer, 200, 7, b);
    o.require(p.pass, p.detail);
    if (o.pass) o.detail = a + "; " + b;
    return o;
}

// 8. Hockey stick for 0 <= s < r <= 40.
Outcome hockey(const Context&) {
    Outcome o;
    long count = 0;
    for (long r = 1; r <= 40; ++r)
        for (long s = 0; s < r; ++s, ++count)
            o.require(selberg::hockey_stick_check(r, s),
                      "r=" + std::to_string(r) + " s=" + std::to_string(s));
    if (o.pass) o.detail = std::to_string(count) + " pairs";
    return o;
}

// 9. The three documented exponent configurations.
Outcome classifier(const Context& ctx) {
    Outcome o;
    const fs::path configs = ctx.golden_dir / "configs";
    auto load = [&](const char* name) {
        return selberg::parse_exponent_config(golden::read_file(configs / name));
    };

    auto valid = selberg::classify(load("one_resonant.json"));
    o.require(valid.r == 1 && valid.resonant_indices == std::vector<int>{1}, "one_resonant: r");
    o.require(valid.lambda_infinity == Rational::parse("-13/12"), "one_resonant: lambda_infinity");
    o.require(valid.violations.empty() && valid.assumption_valid, "one_resonant: violations");

    auto diag = selberg::classify(load("diagonal_integral.json"));
    o.require(diag.r == 0, "diagonal_integral: r");
    o.require(diag.lambda_infinity == Rational::parse("-31/12"), "diagonal_integral: lambda_infinity");
    o.require(diag.violations ==
                  std::vector<selberg::Violation>{
                      {selberg::ExponentCondition::Diagonal, std::nullopt, 2, Integer(2)}},
              "diagonal_integral: violations");
    o.require(!diag.assumption_valid, "diagonal_integral: validity");

    auto single = selberg::classify(load("single_variable.json"));
    o.require(single.r == 1 && single.lambda_infinity == Rational::parse("-1/2") &&
                  single.violations.empty() && single.assumption_valid,
              "single_variable report");

    const std::string dir = configs.string();
    o.require(run_cli(ctx, {"classify", dir + "/one_resonant.json"}).code == 0, "exit code, valid");
    o.require(run_cli(ctx, {"classify", dir + "/diagonal_integral.json"}).code == 3,
              "exit code, violated");
    o.require(run_cli(ctx, {"classify", dir + "/single_variable.json"}).code == 0,
              "exit code, single variable");
    o.require(run_cli(ctx, {"classify", dir + "/zero_denominator.json"}).code == 1,
              "exit code, zero denominator");
    return o;
}

// 10. Golden fixtures, byte for byte, plus config JSON round trip.
Outcome goldens(const Context& ctx) {
    Outcome o;
    auto cases = golden::load_cases(ctx.golden_dir);
    o.require(!cases.empty(), "no golden cases");
    for (const auto& c : cases) {
        auto r = run_cli(ctx, c.args);
        o.require(r.code == c.exit_code, c.fixture + ": exit code " + std::to_string(r.code));
        o.require(r.out == golden::read_file(ctx.golden_dir / "expected" / c.fixture),
                  c.fixture + ": stdout differs");
        if (auto err = golden::expected_stderr(ctx.golden_dir, c))
            o.require(r.err == *err, c.fixture + ": stderr differs");
    }
    for (const char* name : {"one_resonant.json", "diagonal_integral.json", "single_variable.json"}) {
        auto cfg = selberg::parse_exponent_config(
            golden::read_file(ctx.golden_dir / "configs" / name));
        auto again = selberg::parse_exponent_config(selberg::to_json(cfg).dump(2));
        o.require(again == cfg, std::string("round trip ") + name);
    }
    if (o.pass) o.detail = std::to_string(cases.size()) + " fixtures";
    return o;
}

// 11. Nonnegativity for n >= 2m, and the known out-of-regime point.
Outcome validity(const Context&) {
    Outcome o;
    for (int m = 2; m <= 6; ++m)
        for (int n = 2 * m; n <= 14; ++n)
            for (int r = 0; r <= n; ++r)
                o.require(selberg::compute_record({m, n, r}).in_validity_range,
                          "outside validity at " + q3(m, n, r));
    auto rec = selberg::compute_record({2, 2, 2});
    o.require(rec.I_sum == -1 && !rec.in_validity_range && rec.routes_agree, "(2,2,2) probe");
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double max_seconds;
    std::function<Outcome(const Context&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: acceptance <selberg-dims> <golden-dir> <work-dir>\n";
        return 2;
    }
    const Context ctx{argv[1], argv[2], argv[3]};

    const std::vector<Criterion> criteria = {
        {1, "K route equivalence on the m<=8, n<=10 grid", 5.0, k_routes},
        {2, "I route equivalence (sum, D-K, 3F2) on the grid", 10.0, i_routes},
        {3, "D = K + I on the grid", 10.0, additivity},
        {4, "closed forms for r=n, r=n-1 and the product form", 2.0, closed_forms},
        {5, "anchors K(2,n,r)=r, K(3,n,r)=r(n-1), I(4,5,3)=8", 5.0, anchors},
        {6, "Pfaff-Saalschutz, 500 seeded valid cases", 5.0, pfaff},
        {7, "contiguity and Pochhammer residuals, 200 cases each", 2.0, residuals},
        {8, "hockey stick for 0<=s<r<=40", 1.0, hockey},
        {9, "resonance classifier on the documented configs", 10.0, classifier},
        {10, "CLI golden fixtures and config round trip", 60.0, goldens},
        {11, "validity range for n>=2m and the (2,2,2) probe", 10.0, validity},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(ctx);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.max_seconds) {
            o.pass = false;
            o.detail = "took longer than " + std::to_string(c.max_seconds) + " s";
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name;
        std::cout.precision(3);
        std::cout << "  (" << std::fixed << seconds << " s)";
        if (!o.detail.empty()) std::cout << "  " << o.detail;
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
