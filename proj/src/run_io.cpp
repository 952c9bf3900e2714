#include "mimocap/run_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mimocap {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string quantile_column_name(double level) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "quantile_p%03d", static_cast<int>(std::lround(level * 100)));
    return buf;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SimError("write_csv: cannot open " + path.string());
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    emit(table.header);
    for (const auto& row : table.rows) emit(row);
    if (!out) throw SimError("write_csv: write failed for " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("read_csv: cannot open " + path.string());
    CsvTable t;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        cells.push_back(cur);
        return cells;
    };
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells = split(line);
        if (first) {
            t.header = std::move(cells);
            first = false;
        } else {
            if (cells.size() != t.header.size()) {
                throw ParseError("read_csv: ragged row in " + path.string());
            }
            t.rows.push_back(std::move(cells));
        }
    }
    if (first) throw ParseError("read_csv: empty file " + path.string());
    return t;
}

ChannelKind channel_kind_from_string(const std::string& s) {
    if (s == "gaussian-kronecker") return ChannelKind::GaussianKronecker;
    if (s == "nakagami-kronecker") return ChannelKind::NakagamiKronecker;
    throw ValidationError("kind: expected gaussian-kronecker or nakagami-kronecker, got \"" + s +
                          "\"");
}

PowerSplit power_split_from_string(const std::string& s) {
    if (s == "per-stream-total") return PowerSplit::PerStreamTotal;
    if (s == "per-stream-full") return PowerSplit::PerStreamFull;
    throw ValidationError("power_split: expected per-stream-total or per-stream-full, got \"" +
                          s + "\"");
}

ParsedConfig default_config() { return ParsedConfig{}; }

namespace {

double as_number(const std::string& key, const json& v) {
    if (!v.is_number()) throw ParseError(key + ": expected a number");
    return v.get<double>();
}

long long as_integer(const std::string& key, const json& v) {
    if (!v.is_number_integer()) throw ParseError(key + ": expected an integer");
    return v.get<long long>();
}

std::string as_string(const std::string& key, const json& v) {
    if (!v.is_string()) throw ParseError(key + ": expected a string");
    return v.get<std::string>();
}

std::vector<double> as_number_list(const std::string& key, const json& v) {
    if (!v.is_array()) throw ParseError(key + ": expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) out.push_back(as_number(key, e));
    return out;
}

// Clamp a correlation coefficient to the positive-definite limit, recording a
// warning; anything outside [0, 1] is a hard error.
double resolve_rho(ParsedConfig& parsed, const std::string& key, double rho) {
    if (!(rho >= 0.0) || rho > 1.0 || !std::isfinite(rho)) {
        throw ValidationError(key + ": must be in [0, 1], got " + format_double(rho));
    }
    if (rho > tol::kRhoMax) {
        parsed.warnings.push_back(key + ": " + format_double(rho) + " clamped to " +
                                  format_double(tol::kRhoMax) + " (coloring needs R > 0)");
        return tol::kRhoMax;
    }
    return rho;
}

}  // namespace

void apply_config_key(ParsedConfig& parsed, const std::string& key, const json& value) {
    ScenarioConfig& cfg = parsed.cfg;
    if (key == "nt") {
        cfg.nt = static_cast<int>(as_integer(key, value));
    } else if (key == "nr") {
        cfg.nr = static_cast<int>(as_integer(key, value));
    } else if (key == "m") {
        cfg.m = as_number(key, value);
    } else if (key == "kind") {
        cfg.kind = channel_kind_from_string(as_string(key, value));
    } else if (key == "rho") {
        const double rho = resolve_rho(parsed, key, as_number(key, value));
        cfg.rho_tx = rho;
        cfg.rho_rx = rho;
        parsed.keys_set.insert("rho_tx");
        parsed.keys_set.insert("rho_rx");
    } else if (key == "rho_tx") {
        cfg.rho_tx = resolve_rho(parsed, key, as_number(key, value));
    } else if (key == "rho_rx") {
        cfg.rho_rx = resolve_rho(parsed, key, as_number(key, value));
    } else if (key == "snr_db") {
        cfg.snr_db = as_number(key, value);
    } else if (key == "snr_db_grid") {
        cfg.snr_db_grid = as_number_list(key, value);
    } else if (key == "rho_grid") {
        std::vector<double> grid = as_number_list(key, value);
        for (double& r : grid) r = resolve_rho(parsed, key, r);
        cfg.rho_grid = std::move(grid);
    } else if (key == "trials") {
        cfg.trials = as_integer(key, value);
    } else if (key == "seed") {
        if (!value.is_number_integer() && !value.is_number_unsigned()) {
            throw ParseError("seed: expected an integer");
        }
        cfg.seed = value.get<std::uint64_t>();
    } else if (key == "power_split") {
        cfg.power_split = power_split_from_string(as_string(key, value));
    } else if (key == "cdf_level") {
        cfg.cdf_level = as_number(key, value);
    } else {
        throw ValidationError("unknown config key \"" + key + "\"");
    }
    parsed.keys_set.insert(key);
}

ParsedConfig parse_config_json(const json& j) {
    if (!j.is_object()) throw ParseError("config: top level must be a JSON object");
    ParsedConfig parsed;
    // Manifests embed the config under "config"; accept them directly.
    const json* obj = &j;
    if (j.contains("command") && j.contains("config")) {
        if (!j["config"].is_object()) throw ParseError("manifest: \"config\" must be an object");
        obj = &j["config"];
    }
    for (const auto& item : obj->items()) {
        apply_config_key(parsed, item.key(), item.value());
    }
    validate_config(parsed.cfg);
    return parsed;
}

ParsedConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_config_json(j);
}

ParsedConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("config: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

json config_to_json(const ScenarioConfig& cfg) {
    json j;
    j["nt"] = cfg.nt;
    j["nr"] = cfg.nr;
    j["m"] = cfg.m;
    j["kind"] = to_string(cfg.kind);
    j["rho_tx"] = cfg.rho_tx;
    j["rho_rx"] = cfg.rho_rx;
    j["snr_db"] = cfg.snr_db;
    j["snr_db_grid"] = cfg.snr_db_grid;
    j["rho_grid"] = cfg.rho_grid;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["power_split"] = to_string(cfg.power_split);
    j["cdf_level"] = cfg.cdf_level;
    return j;
}

}  // namespace mimocap
