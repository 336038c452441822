#include "selberg/serialize.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace selberg {
namespace {

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

std::string hyp_cell(const DimensionRecord& rec) {
    if (rec.I_hyp) return rec.I_hyp->to_string();
    return rec.I_hyp_error ? rec.I_hyp_error->message() : "missing";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

constexpr std::array<const char*, 12> kColumns = {
    "m",     "n",     "r",          "D",           "K_recursion",  "K_prop1",
    "K_closed", "I_sum", "I_hyp", "I_subtract", "routes_agree", "in_validity_range"};

std::array<std::string, 12> cells(const DimensionRecord& rec) {
    return {std::to_string(rec.query.m), std::to_string(rec.query.n),
            std::to_string(rec.query.r), to_string(rec.D),
            to_string(rec.K_recursion),  to_string(rec.K_descent),
            to_string(rec.K_closed),     to_string(rec.I_sum),
            hyp_cell(rec),               to_string(rec.I_subtract),
            bool_text(rec.routes_agree), bool_text(rec.in_validity_range)};
}

Rational field_rational(const Json& value, const std::string& where) {
    if (!value.is_string()) throw ConfigParseError(where + ": expected a rational string \"p/q\"");
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const RationalParseError& e) {
        throw ConfigParseError(where + ": " + e.what());
    }
}

}  // namespace

ExponentConfig parse_exponent_config(std::string_view json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw ConfigParseError("config: malformed JSON at byte " + std::to_string(e.byte));
    }
    if (!doc.is_object()) throw ConfigParseError("config: top level must be an object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "m" && key != "g" && key != "lambdas")
            throw ConfigParseError("config: unknown key \"" + key + "\"");
    }
    if (!doc.contains("m") || !doc.contains("g") || !doc.contains("lambdas"))
        throw ConfigParseError("config: keys \"m\", \"g\" and \"lambdas\" are required");

    ExponentConfig cfg;
    const Json& m = doc["m"];
    if (!m.is_number_integer()) throw ConfigParseError("m: expected an integer");
    const auto m_value = m.get<std::int64_t>();
    if (m_value < 1 || m_value > 1'000'000) throw ConfigParseError("m: must be >= 1");
    cfg.m = static_cast<int>(m_value);

    cfg.g = field_rational(doc["g"], "g");

    const Json& lambdas = doc["lambdas"];
    if (!lambdas.is_array() || lambdas.empty())
        throw ConfigParseError("lambdas: expected a non-empty array");
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        cfg.lambdas.push_back(field_rational(lambdas[i], "lambdas[" + std::to_string(i) + "]"));
    return cfg;
}

Json to_json(const ExponentConfig& cfg) {
    Json lambdas = Json::array();
    for (const auto& l : cfg.lambdas) lambdas.push_back(l.to_string());
    return Json{{"m", cfg.m}, {"g", cfg.g.to_string()}, {"lambdas", std::move(lambdas)}};
}

Json to_json(const DimensionRecord& rec) {
    Json out;
    out["m"] = rec.query.m;
    out["n"] = rec.query.n;
    out["r"] = rec.query.r;
    out["D"] = integer_json(rec.D);
    out["K"] = integer_json(rec.K_closed);
    out["I"] = integer_json(rec.I_sum);
    out["K_recursion"] = integer_json(rec.K_recursion);
    out["K_prop1"] = integer_json(rec.K_descent);
    out["K_closed"] = integer_json(rec.K_closed);
    out["I_sum"] = integer_json(rec.I_sum);
    out["I_hyp"] = rec.I_hyp ? Json(rec.I_hyp->to_string()) : Json(nullptr);
    if (rec.I_hyp_error) out["I_hyp_error"] = rec.I_hyp_error->message();
    out["I_subtract"] = integer_json(rec.I_subtract);
    out["routes_agree"] = rec.routes_agree;
    out["in_validity_range"] = rec.in_validity_range;
    return out;
}

Json to_json(const ResonanceReport& rep) {
    Json violations = Json::array();
    for (const auto& v : rep.violations) {
        Json item;
        item["condition"] = to_string(v.condition);
        item["j"] = v.j ? Json(*v.j) : Json(nullptr);
        item["k"] = v.k;
        item["value"] = v.value.get_str();
        violations.push_back(std::move(item));
    }
    Json out;
    out["resonant_indices"] = rep.resonant_indices;
    out["r"] = rep.r;
    out["lambda_infinity"] = rep.lambda_infinity.to_string();
    out["violations"] = std::move(violations);
    out["assumption_valid"] = rep.assumption_valid;
    return out;
}

std::string csv_header() {
    std::string out;
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        if (i) out += ',';
        out += kColumns[i];
    }
    return out;
}

std::string to_csv_row(const DimensionRecord& rec) {
    std::string out;
    const auto row = cells(rec);
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
    }
    return out;
}

std::string render_pretty_table(const std::vector<DimensionRecord>& rows) {
    std::vector<std::array<std::string, 12>> body;
    body.reserve(rows.size());
    std::array<std::size_t, 12> width{};
    for (std::size_t c = 0; c < kColumns.size(); ++c) width[c] = std::string_view(kColumns[c]).size();
    for (const auto& rec : rows) {
        body.push_back(cells(rec));
        for (std::size_t c = 0; c < width.size(); ++c) width[c] = std::max(width[c], body.back()[c].size());
    }

    std::ostringstream os;
    auto emit = [&](auto&& cell_at) {
        for (std::size_t c = 0; c < width.size(); ++c) {
            std::string cell = cell_at(c);
            if (c) os << "  ";
            os << std::string(width[c] - cell.size(), ' ') << cell;
        }
        os << '\n';
    };
    emit([&](std::size_t c) { return std::string(kColumns[c]); });
    for (const auto& row : body) emit([&](std::size_t c) { return row[c]; });
    return os.str();
}

std::string render_pretty(const DimensionRecord& rec) { return render_pretty_table({rec}); }

std::string render_pretty(const ResonanceReport& rep) {
    std::ostringstream os;
    os << "r                 " << rep.r << '\n';
    os << "resonant_indices  ";
    if (rep.resonant_indices.empty()) os << "none";
    for (std::size_t i = 0; i < rep.resonant_indices.size(); ++i)
        os << (i ? " " : "") << rep.resonant_indices[i];
    os << '\n';
    os << "lambda_infinity   " << rep.lambda_infinity << '\n';
    os << "assumption_valid  " << bool_text(rep.assumption_valid) << '\n';
    os << "violations        " << rep.violations.size() << '\n';
    for (const auto& v : rep.violations) {
        os << "  " << to_string(v.condition);
        if (v.j) os << " j=" << *v.j;
        os << " k=" << v.k << " exponent=" << v.value.get_str() << '\n';
    }
    return os.str();
}

}  // namespace selberg
