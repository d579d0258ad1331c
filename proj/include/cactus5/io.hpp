#pragma once

// Serialization of atlases, classifications and reports, plus small
// renderers for individual classes. JSON output uses nlohmann::ordered_json
// so files are byte-stable across runs.

#include <string>

#include <nlohmann/json.hpp>

#include "cactus5/boundary.hpp"
#include "cactus5/canonical.hpp"
#include "cactus5/monodromy.hpp"
#include "cactus5/numeric.hpp"

namespace cactus5 {

using ordered_json = nlohmann::ordered_json;

// {family, degree, equivalence, count, classes:[{index, key, edges, shape}]}
// First-type edges are [label, a, b]; second-type edges [label, a, b, ch]
// with ch one of "x", "y" or null.
ordered_json atlas_to_json(const Atlas& atlas);

// aligned table, one class per line
std::string atlas_to_text(const Atlas& atlas);

ordered_json classification_to_json(const Classification& cl);
ordered_json sample_table_to_json(const SampleTable& table);
ordered_json oracle_report_to_json(const OracleReport& report);

std::string oracle_report_to_text(const OracleReport& report);

// single-class renderers; format is "text", "dot", "json" or "tikz"
std::string render_first(const FirstCactus& c, const std::string& format);
std::string render_second(const SecondCactus& c, const std::string& format);

} // namespace cactus5
