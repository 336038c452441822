#pragma once

// Text forms for records and reports. Rationals are always "p/q" strings,
// integers are JSON numbers (strings if they exceed 64 bits), and every
// object keeps a fixed key order so output is byte-stable.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "selberg/dims.hpp"
#include "selberg/resonance.hpp"

namespace selberg {

using Json = nlohmann::ordered_json;

class ConfigParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"m": int, "g": "p/q", "lambdas": ["p/q", ...]}
ExponentConfig parse_exponent_config(std::string_view json_text);
Json to_json(const ExponentConfig& cfg);

Json to_json(const DimensionRecord& rec);
Json to_json(const ResonanceReport& rep);

std::string csv_header();
std::string to_csv_row(const DimensionRecord& rec);

std::string render_pretty(const DimensionRecord& rec);
std::string render_pretty_table(const std::vector<DimensionRecord>& rows);
std::string render_pretty(const ResonanceReport& rep);

}  // namespace selberg
