#pragma once

// Identity-verification suites driven by the CLI `verify` command.
//
// Randomized suites use std::mt19937_64 seeded with the user seed, one fresh
// engine per suite. An integer in [lo, hi] is drawn as lo + (e() mod (hi-lo+1))
// and a random rational as numerator in [-8, 8] then denominator in [1, 4].
// Both the engine and this reduction are fully specified, so a (suite, seed,
// cases) triple reproduces the same parameters on every platform.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "selberg/exactnum.hpp"
#include "selberg/serialize.hpp"

namespace selberg {

enum class Suite { Pfaff, Contiguity, Pochhammer, Hockey, Routes, FullResonance };

const char* to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

class SuiteRng {
public:
    explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi);
    Rational rational(long max_abs_numerator = 8, long max_denominator = 4);

private:
    std::mt19937_64 engine_;
};

struct SuiteReport {
    Suite suite;
    bool exhaustive = false;
    std::uint64_t seed = 0;   // randomized suites only
    long requested = 0;       // randomized suites only
    long passed = 0;
    long failed = 0;
    long skipped = 0;         // draws rejected because an evaluation was undefined
    std::optional<std::string> first_counterexample;

    bool ok() const { return failed == 0 && passed > 0; }
};

/// Default case counts: pfaff 500, contiguity 200, pochhammer 200.
long default_cases(Suite s);

/// `cases` counts valid draws for randomized suites and is ignored by the
/// exhaustive ones (hockey, routes, theorem2).
SuiteReport run_suite(Suite s, std::uint64_t seed, long cases);

Json to_json(const SuiteReport& rep);
std::string suite_csv_header();
std::string to_csv_row(const SuiteReport& rep);
std::string render_pretty(const SuiteReport& rep);

}  // namespace selberg
