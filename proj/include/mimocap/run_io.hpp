#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mimocap/montecarlo.hpp"

namespace mimocap {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

/// Column header for the quantile at a CDF level, e.g. 0.8 -> "quantile_p080".
std::string quantile_column_name(double level);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Newline-terminated rows, '.' decimal separator, no quoting.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Throws ParseError on missing file or ragged rows.
CsvTable read_csv(const std::filesystem::path& path);

// A config plus which keys were given explicitly and any warnings raised
// while resolving it (e.g. a rho clamped to the positive-definite limit).
struct ParsedConfig {
    ScenarioConfig cfg;
    std::set<std::string> keys_set;
    std::vector<std::string> warnings;
};

ParsedConfig default_config();

/// Apply one config key. Shared by file parsing and CLI flag overrides so
/// both go through identical validation and clamping. Unknown keys are
/// rejected, not ignored.
void apply_config_key(ParsedConfig& parsed, const std::string& key, const nlohmann::json& value);

ParsedConfig parse_config_json(const nlohmann::json& j);
ParsedConfig parse_config_text(const std::string& text);

/// Reads either a plain config file or a run manifest (the manifest's
/// embedded config is used, making any run reproducible from its manifest).
ParsedConfig parse_config_file(const std::filesystem::path& path);

nlohmann::json config_to_json(const ScenarioConfig& cfg);

ChannelKind channel_kind_from_string(const std::string& s);    // ValidationError
PowerSplit power_split_from_string(const std::string& s);      // ValidationError

}  // namespace mimocap
