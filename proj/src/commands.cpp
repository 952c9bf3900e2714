#include "mimocap/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>

#include "mimocap/version.hpp"

namespace mimocap {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kCdfPoints = 201;
constexpr std::size_t kPdfBins = 60;

class ManifestWriter {
public:
    ManifestWriter(const ParsedConfig& parsed, const RunOptions& opts, const char* command)
        : opts_(opts), command_(command), start_(std::chrono::steady_clock::now()) {
        man_["command"] = command;
        man_["tool_version"] = kToolVersion;
        man_["seed"] = parsed.cfg.seed;
        man_["config"] = config_to_json(parsed.cfg);
        man_["warnings"] = parsed.warnings;
        man_["rejected_draws"] = json::object();
        man_["outputs"] = json::array();
        fs::create_directories(opts.out_dir);
    }

    void add_rejected(const std::string& grid_point, long long count) {
        man_["rejected_draws"][grid_point] = count;
    }

    void set(const std::string& key, const json& value) { man_[key] = value; }

    fs::path write_csv_output(const std::string& name, const CsvTable& table) {
        const fs::path p = opts_.out_dir / name;
        write_csv(p, table);
        outputs_.push_back(p);
        man_["outputs"].push_back(name);
        return p;
    }

    std::vector<fs::path> finish() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        man_["duration_seconds"] =
            std::chrono::duration_cast<std::chrono::duration<double>>(elapsed).count();
        const fs::path p = opts_.out_dir / (std::string(command_) + ".manifest.json");
        std::ofstream out(p, std::ios::binary);
        if (!out) throw SimError("manifest: cannot open " + p.string());
        out << man_.dump(2) << '\n';
        outputs_.push_back(p);
        return outputs_;
    }

private:
    RunOptions opts_;
    const char* command_;
    std::chrono::steady_clock::time_point start_;
    json man_;
    std::vector<fs::path> outputs_;
};

CsvTable cdf_table(const CapacitySamples& samples) {
    CsvTable t;
    t.header = {"capacity_bps_hz", "F"};
    for (const CdfPoint& p : empirical_cdf(samples, kCdfPoints)) {
        t.rows.push_back({format_double(p.capacity), format_double(p.f)});
    }
    return t;
}

CsvTable pdf_table(const CapacitySamples& samples) {
    CsvTable t;
    t.header = {"bin_center_bps_hz", "density"};
    for (const PdfBin& b : empirical_pdf(samples, kPdfBins)) {
        t.rows.push_back({format_double(b.center), format_double(b.density)});
    }
    return t;
}

}  // namespace

std::vector<fs::path> cmd_sweep_snr(const ParsedConfig& parsed, const RunOptions& opts) {
    ManifestWriter man(parsed, opts, "sweep-snr");
    const std::vector<SweepSnrRow> rows = sweep_snr(parsed.cfg, opts.mode);
    CsvTable t;
    t.header = {"snr_db", "receiver", "ergodic_capacity_bps_hz", "stderr",
                quantile_column_name(parsed.cfg.cdf_level)};
    for (const SweepSnrRow& r : rows) {
        t.rows.push_back({format_double(r.snr_db), r.receiver, format_double(r.ergodic),
                          format_double(r.std_error), format_double(r.quantile)});
        if (r.receiver == "zf") {
            man.add_rejected("snr_db=" + format_double(r.snr_db), r.rejected);
        }
    }
    man.write_csv_output("sweep_snr.csv", t);
    return man.finish();
}

std::vector<fs::path> cmd_sweep_rho(const ParsedConfig& parsed, const RunOptions& opts) {
    ManifestWriter man(parsed, opts, "sweep-rho");
    const std::vector<SweepRhoRow> rows = sweep_rho(parsed.cfg, parsed.cfg.snr_db, opts.mode);
    CsvTable t;
    t.header = {"rho", "receiver", "ergodic_capacity_bps_hz", "stderr"};
    for (const SweepRhoRow& r : rows) {
        t.rows.push_back({format_double(r.rho), r.receiver, format_double(r.ergodic),
                          format_double(r.std_error)});
        if (r.receiver == "zf") man.add_rejected("rho=" + format_double(r.rho), r.rejected);
    }
    man.write_csv_output("sweep_rho.csv", t);
    return man.finish();
}

std::vector<fs::path> cmd_cdf(const ParsedConfig& parsed, const RunOptions& opts) {
    ManifestWriter man(parsed, opts, "cdf");
    const ScenarioResult res = run_scenario(parsed.cfg, parsed.cfg.snr_db, opts.mode);
    man.add_rejected("snr_db=" + format_double(parsed.cfg.snr_db), res.zf.rejected_draws);
    man.write_csv_output("cdf_zf.csv", cdf_table(res.zf));
    man.write_csv_output("cdf_mmse.csv", cdf_table(res.mmse));
    man.write_csv_output("pdf_zf.csv", pdf_table(res.zf));
    man.write_csv_output("pdf_mmse.csv", pdf_table(res.mmse));
    return man.finish();
}

std::vector<fs::path> cmd_table1(const ParsedConfig& parsed, const RunOptions& opts) {
    ManifestWriter man(parsed, opts, "table1");

    std::vector<double> grid;
    if (parsed.keys_set.count("snr_db_grid")) {
        grid = parsed.cfg.snr_db_grid;
        std::sort(grid.begin(), grid.end());
    } else {
        for (int s = 0; s <= 40; ++s) grid.push_back(static_cast<double>(s));
    }

    struct RowSpec {
        int row_id;
        int antennas;
        const char* receiver;
        double target;
    };
    // Reference 0.8-quantile capacities (b/s/Hz) for the four systems.
    const RowSpec specs[] = {
        {1, 4, "zf", 1.26},
        {2, 8, "zf", 2.975},
        {3, 4, "mmse", 12.92},
        {4, 8, "mmse", 27.32},
    };

    CsvTable t;
    t.header = {"candidate_snr_db", "row_id", "receiver", "nt", "nr",
                quantile_column_name(parsed.cfg.cdf_level), "target", "relative_error"};

    double best_snr = grid.front();
    double best_sse = std::numeric_limits<double>::infinity();
    json best_rows = json::array();

    for (double snr_db : grid) {
        double quantiles[2][2];  // [size index 4->0, 8->1][receiver zf->0, mmse->1]
        for (int si = 0; si < 2; ++si) {
            ScenarioConfig cfg = parsed.cfg;
            cfg.nt = si == 0 ? 4 : 8;
            cfg.nr = cfg.nt;
            const ScenarioResult res = run_scenario(cfg, snr_db, opts.mode);
            quantiles[si][0] = quantile_at_cdf(res.zf, cfg.cdf_level);
            quantiles[si][1] = quantile_at_cdf(res.mmse, cfg.cdf_level);
            man.add_rejected("snr_db=" + format_double(snr_db) + ",system=" +
                                 std::to_string(cfg.nt) + "x" + std::to_string(cfg.nr),
                             res.zf.rejected_draws);
        }
        double sse = 0.0;
        json rows_here = json::array();
        for (const RowSpec& s : specs) {
            const double q = quantiles[s.antennas == 4 ? 0 : 1][s.receiver[0] == 'z' ? 0 : 1];
            const double rel = (q - s.target) / s.target;
            sse += rel * rel;
            t.rows.push_back({format_double(snr_db), std::to_string(s.row_id), s.receiver,
                              std::to_string(s.antennas), std::to_string(s.antennas),
                              format_double(q), format_double(s.target), format_double(rel)});
            rows_here.push_back({{"row_id", s.row_id},
                                 {"receiver", s.receiver},
                                 {"nt", s.antennas},
                                 {"nr", s.antennas},
                                 {"quantile", q},
                                 {"target", s.target},
                                 {"relative_error", rel}});
        }
        if (sse < best_sse) {
            best_sse = sse;
            best_snr = snr_db;
            best_rows = rows_here;
        }
    }

    man.set("best_fit_snr_db", best_snr);
    man.set("best_fit_sse", best_sse);
    man.set("best_fit_rows", best_rows);
    man.set("note",
            "reference values pin no operating SNR; best_fit_snr_db minimizes the sum of "
            "squared relative errors over the candidate grid");
    man.write_csv_output("table1.csv", t);
    return man.finish();
}

}  // namespace mimocap
