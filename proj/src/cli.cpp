#include "selberg/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "selberg/dims.hpp"
#include "selberg/resonance.hpp"
#include "selberg/serialize.hpp"
#include "selberg/verify.hpp"

namespace selberg {
namespace {

enum class OutputFormat { Pretty, Json, Csv };

const std::map<std::string, OutputFormat> kFormats = {
    {"pretty", OutputFormat::Pretty}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

const std::map<std::string, RPolicy> kPolicies = {{"all", RPolicy::All},
                                                  {"only-n", RPolicy::OnlyN},
                                                  {"only-n-minus-1", RPolicy::OnlyNMinus1}};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int parse_int(std::string_view text, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw UsageError(what + ": \"" + std::string(text) + "\" is not an integer");
    return value;
}

// "lo..hi" or a single integer.
IntRange parse_range(const std::string& text, const std::string& what) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(text, what);
        return {v, v};
    }
    return {parse_int(std::string_view(text).substr(0, dots), what),
            parse_int(std::string_view(text).substr(dots + 2), what)};
}

struct DimsArgs {
    int m = 0, n = 0, r = 0;
    std::string format = "pretty";
};

struct TableArgs {
    std::string m_range, n_range;
    std::string policy = "all";
    std::string format = "csv";
    std::string out_path;
};

struct ClassifyArgs {
    std::string config_path;
    std::string format = "pretty";
};

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    std::optional<long> cases;
    std::string format = "pretty";
};

std::string render_table(const std::vector<DimensionRecord>& rows, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Pretty: return render_pretty_table(rows);
        case OutputFormat::Json: {
            Json arr = Json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            return dump(arr);
        }
        case OutputFormat::Csv: {
            std::string out = csv_header() + "\n";
            for (const auto& r : rows) out += to_csv_row(r) + "\n";
            return out;
        }
    }
    return {};
}

int cmd_dims(const DimsArgs& a, std::ostream& out) {
    DimensionRecord rec;
    try {
        rec = compute_record({a.m, a.n, a.r});
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const OutputFormat fmt = kFormats.at(a.format);
    if (fmt == OutputFormat::Json)
        out << dump(to_json(rec));
    else
        out << render_table({rec}, fmt);
    return rec.routes_agree ? kExitOk : kExitDisagreement;
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<DimensionRecord> rows;
    try {
        rows = table(parse_range(a.m_range, "--m-range"), parse_range(a.n_range, "--n-range"),
                     kPolicies.at(a.policy));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const std::string text = render_table(rows, kFormats.at(a.format));
    if (a.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(a.out_path, std::ios::binary);
        file << text;
        file.close();
        if (!file) {
            err << "error: cannot write " << a.out_path << '\n';
            return kExitUsage;
        }
    }
    for (const auto& r : rows)
        if (!r.routes_agree) return kExitDisagreement;
    return kExitOk;
}

std::string read_config(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(file), {}};
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
    ExponentConfig cfg;
    try {
        cfg = parse_exponent_config(read_config(a.config_path));
    } catch (const ConfigParseError& e) {
        throw UsageError(e.what());
    }
    const ResonanceReport rep = classify(cfg);
    std::optional<DimensionRecord> rec;
    if (rep.assumption_valid) rec = dims_for_config(cfg).record;

    switch (kFormats.at(a.format)) {
        case OutputFormat::Pretty:
            out << "config            " << to_json(cfg).dump() << '\n' << render_pretty(rep);
            if (rec) out << '\n' << render_pretty(*rec);
            break;
        case OutputFormat::Json: {
            Json doc;
            doc["config"] = to_json(cfg);
            doc["report"] = to_json(rep);
            doc["record"] = rec ? to_json(*rec) : Json(nullptr);
            out << dump(doc);
            break;
        }
        case OutputFormat::Csv: {
            out << "r,lambda_infinity,resonant_indices,violations,assumption_valid\n";
            out << rep.r << ',' << rep.lambda_infinity << ',';
            for (std::size_t i = 0; i < rep.resonant_indices.size(); ++i)
                out << (i ? ";" : "") << rep.resonant_indices[i];
            out << ',' << rep.violations.size() << ',' << (rep.assumption_valid ? "true" : "false")
                << '\n';
            if (rec) out << csv_header() << '\n' << to_csv_row(*rec) << '\n';
            break;
        }
    }
    return rep.assumption_valid ? kExitOk : kExitAssumptionViolated;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::vector<Suite> suites;
    if (a.suite == "all") {
        suites = all_suites();
    } else if (auto s = parse_suite(a.suite)) {
        suites = {*s};
    } else {
        throw UsageError("unknown suite \"" + a.suite + "\"");
    }
    if (a.cases && *a.cases < 1) throw UsageError("--cases must be >= 1");

    std::vector<SuiteReport> reports;
    bool all_ok = true;
    for (Suite s : suites) {
        reports.push_back(run_suite(s, a.seed, a.cases.value_or(default_cases(s))));
        all_ok = all_ok && reports.back().ok();
    }

    switch (kFormats.at(a.format)) {
        case OutputFormat::Pretty:
            for (const auto& r : reports) out << render_pretty(r);
            if (reports.size() > 1) out << "overall: " << (all_ok ? "PASS" : "FAIL") << '\n';
            break;
        case OutputFormat::Json: {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            Json doc;
            doc["suites"] = std::move(arr);
            doc["ok"] = all_ok;
            out << dump(doc);
            break;
        }
        case OutputFormat::Csv:
            out << suite_csv_header() << '\n';
            for (const auto& r : reports) out << to_csv_row(r) << '\n';
            break;
    }
    return all_ok ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact dimension counts for regularizable cycles of Selberg-type integrals"};
    app.name(args.empty() ? "selberg-dims" : args.front());
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"pretty", "json", "csv"});

    DimsArgs dims_args;
    auto* dims = app.add_subcommand("dims", "Compute one dimension record by every route");
    dims->add_option("-m", dims_args.m, "number of integration variables")->required();
    dims->add_option("-n", dims_args.n, "number of points")->required();
    dims->add_option("-r", dims_args.r, "number of resonant exponents")->required();
    dims->add_option("--format", dims_args.format)->check(format_check);

    TableArgs table_args;
    auto* tbl = app.add_subcommand("table", "Emit dimension records over ranges of m and n");
    tbl->add_option("--m-range", table_args.m_range, "lo..hi or a single value")->required();
    tbl->add_option("--n-range", table_args.n_range, "lo..hi or a single value")->required();
    tbl->add_option("--r-policy", table_args.policy)
        ->check(CLI::IsMember({"all", "only-n", "only-n-minus-1"}));
    tbl->add_option("--format", table_args.format)->check(format_check);
    tbl->add_option("--out", table_args.out_path, "write to this file instead of stdout");

    ClassifyArgs classify_args;
    auto* cls = app.add_subcommand("classify", "Classify an exponent configuration (JSON file)");
    cls->add_option("config", classify_args.config_path, "config file, or - for stdin")->required();
    cls->add_option("--format", classify_args.format)->check(format_check);

    VerifyArgs verify_args;
    long cases = 0;
    auto* ver = app.add_subcommand("verify", "Run an identity verification suite");
    ver->add_option("suite", verify_args.suite,
                    "pfaff | contiguity | pochhammer | hockey | routes | theorem2 | all")
        ->required();
    ver->add_option("--seed", verify_args.seed);
    auto* cases_opt = ver->add_option("--cases", cases, "valid random cases to check");
    ver->add_option("--format", verify_args.format)->check(format_check);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("selberg-dims");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*dims) return cmd_dims(dims_args, out);
        if (*tbl) return cmd_table(table_args, out, err);
        if (*cls) return cmd_classify(classify_args, out);
        if (*ver) {
            if (*cases_opt) verify_args.cases = cases;
            return cmd_verify(verify_args, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace selberg
