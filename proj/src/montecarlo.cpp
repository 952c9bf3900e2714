#include "mimocap/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>

namespace mimocap {

namespace {

void require(bool ok, const std::string& field, const std::string& why) {
    if (!ok) throw ValidationError(field + ": " + why);
}

std::string scenario_label(const ScenarioConfig& cfg, double snr_db, const char* receiver) {
    std::ostringstream os;
    os << receiver << " " << cfg.nt << "x" << cfg.nr << " kind=" << to_string(cfg.kind)
       << " m=" << cfg.m << " rho_tx=" << cfg.rho_tx << " rho_rx=" << cfg.rho_rx
       << " snr_db=" << snr_db << " split=" << to_string(cfg.power_split)
       << " seed=" << cfg.seed;
    return os.str();
}

struct TrialTotals {
    double zf = 0.0;
    double mmse = 0.0;
    int rejects = 0;
};

TrialTotals trial_totals(const ChannelSampler& sampler, std::uint64_t trial, const SnrSpec& snr) {
    int rejects = 0;
    const StreamMetrics m = run_trial(sampler, trial, snr, &rejects);
    return TrialTotals{m.zf_total, m.mmse_total, rejects};
}

std::vector<double> sorted_values(const CapacitySamples& samples) {
    if (samples.values.empty()) throw EmptySamples("no capacity samples for " + samples.label);
    std::vector<double> v = samples.values;
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

void validate_config(const ScenarioConfig& cfg) {
    require(cfg.nt >= 1, "nt", "must be >= 1");
    require(cfg.nr >= 1, "nr", "must be >= 1");
    require(cfg.nr >= cfg.nt, "nr",
            "must be >= nt (ZF needs at least as many receive as transmit antennas)");
    require(cfg.m >= 0.5 && std::isfinite(cfg.m), "m", "must be >= 0.5");
    require(cfg.rho_tx >= 0.0 && cfg.rho_tx <= tol::kRhoMax, "rho_tx",
            "must be in [0, 0.999]");
    require(cfg.rho_rx >= 0.0 && cfg.rho_rx <= tol::kRhoMax, "rho_rx",
            "must be in [0, 0.999]");
    require(std::isfinite(cfg.snr_db), "snr_db", "must be finite");
    require(!cfg.snr_db_grid.empty(), "snr_db_grid", "must be non-empty");
    for (double s : cfg.snr_db_grid) {
        require(std::isfinite(s), "snr_db_grid", "entries must be finite");
    }
    require(!cfg.rho_grid.empty(), "rho_grid", "must be non-empty");
    for (double r : cfg.rho_grid) {
        require(r >= 0.0 && r <= tol::kRhoMax, "rho_grid", "entries must be in [0, 0.999]");
    }
    require(cfg.trials >= 1, "trials", "must be >= 1");
    require(cfg.cdf_level > 0.0 && cfg.cdf_level < 1.0, "cdf_level", "must be in (0, 1)");
}

ChannelSampler make_sampler(const ScenarioConfig& cfg) {
    validate_config(cfg);
    return ChannelSampler(static_cast<std::size_t>(cfg.nr), static_cast<std::size_t>(cfg.nt),
                          cfg.kind, cfg.m, cfg.rho_rx, cfg.rho_tx, cfg.seed);
}

ChannelRealization draw_realization(const ScenarioConfig& cfg, std::uint64_t trial) {
    return make_sampler(cfg).draw(trial);
}

StreamMetrics run_trial(const ChannelSampler& sampler, std::uint64_t trial, const SnrSpec& snr,
                        int* rejects) {
    const double rho_eff = snr.per_stream_snr(sampler.nt());
    for (int attempt = 0; attempt < tol::kMaxRedraws; ++attempt) {
        const ChannelRealization real = sampler.draw(trial, static_cast<std::uint64_t>(attempt));
        const HermitianMatrix gram = herm_gram(real.h);
        std::optional<HermitianMatrix> gram_inv;
        try {
            gram_inv.emplace(inv_pd(gram));
        } catch (const NotPositiveDefinite&) {
            continue;  // singular draw, redraw from the next sub-stream
        }
        if (cond1_from(gram, *gram_inv) > tol::kRejectCond1) continue;
        if (rejects) *rejects = attempt;
        return metrics_from_gram(gram, *gram_inv, rho_eff);
    }
    throw SimError("run_trial: trial " + std::to_string(trial) + " rejected " +
                   std::to_string(tol::kMaxRedraws) + " draws in a row");
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, double snr_db, ExecMode mode) {
    validate_config(cfg);
    const ChannelSampler sampler = make_sampler(cfg);
    const SnrSpec snr = SnrSpec::from_db(snr_db, cfg.power_split);
    const long long n = cfg.trials;

    std::vector<TrialTotals> totals(static_cast<std::size_t>(n));

    if (mode == ExecMode::Parallel) {
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static)
        for (long long t = 0; t < n; ++t) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                totals[static_cast<std::size_t>(t)] =
                    trial_totals(sampler, static_cast<std::uint64_t>(t), snr);
            } catch (...) {
                failed.store(true, std::memory_order_relaxed);
            }
        }
        if (failed.load()) {
            throw SimError("run_scenario: a trial failed; rerun serially for the message");
        }
    } else {
        // Reference path: the plain loop the parallel version must reproduce.
        for (long long t = 0; t < n; ++t) {
            totals[static_cast<std::size_t>(t)] =
                trial_totals(sampler, static_cast<std::uint64_t>(t), snr);
        }
    }

    ScenarioResult res;
    res.zf.label = scenario_label(cfg, snr_db, "zf");
    res.mmse.label = scenario_label(cfg, snr_db, "mmse");
    res.zf.values.reserve(totals.size());
    res.mmse.values.reserve(totals.size());
    long long rejected = 0;
    for (const TrialTotals& t : totals) {  // trial-index order, independent of scheduling
        res.zf.values.push_back(t.zf);
        res.mmse.values.push_back(t.mmse);
        rejected += t.rejects;
    }
    res.zf.rejected_draws = rejected;
    res.mmse.rejected_draws = rejected;
    return res;
}

ErgodicCapacity ergodic_capacity(const CapacitySamples& samples) {
    if (samples.values.empty()) throw EmptySamples("ergodic_capacity: " + samples.label);
    const std::vector<double>& v = samples.values;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    if (v.size() == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
    return {mean, sd / std::sqrt(static_cast<double>(v.size()))};
}

std::vector<CdfPoint> empirical_cdf(const CapacitySamples& samples, std::size_t points) {
    if (points < 2) throw DomainError("empirical_cdf: points must be >= 2");
    const std::vector<double> v = sorted_values(samples);
    const double lo = v.front();
    const double hi = v.back();
    const double n = static_cast<double>(v.size());
    std::vector<CdfPoint> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double x =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        const auto it = std::upper_bound(v.begin(), v.end(), x);
        out[i] = CdfPoint{x, static_cast<double>(it - v.begin()) / n};
    }
    out.back().f = 1.0;  // x = max by construction
    return out;
}

double ecdf_value(const CapacitySamples& samples, double x) {
    const std::vector<double> v = sorted_values(samples);
    const auto it = std::upper_bound(v.begin(), v.end(), x);
    return static_cast<double>(it - v.begin()) / static_cast<double>(v.size());
}

std::vector<PdfBin> empirical_pdf(const CapacitySamples& samples, std::size_t bins) {
    if (bins < 1) throw DomainError("empirical_pdf: bins must be >= 1");
    const std::vector<double> v = sorted_values(samples);
    const double lo = v.front();
    double hi = v.back();
    if (hi == lo) hi = lo + 1.0;  // degenerate sample set: one unit-wide bin span
    const double w = (hi - lo) / static_cast<double>(bins);
    std::vector<long long> counts(bins, 0);
    for (double x : v) {
        auto b = static_cast<std::size_t>((x - lo) / w);
        if (b >= bins) b = bins - 1;
        ++counts[b];
    }
    std::vector<PdfBin> out(bins);
    const double n = static_cast<double>(v.size());
    for (std::size_t b = 0; b < bins; ++b) {
        out[b] = PdfBin{lo + (static_cast<double>(b) + 0.5) * w,
                        static_cast<double>(counts[b]) / (n * w)};
    }
    return out;
}

double quantile_at_cdf(const CapacitySamples& samples, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw BadProbability("quantile_at_cdf: p must be in (0, 1), got " + std::to_string(p));
    }
    const std::vector<double> v = sorted_values(samples);
    const double n = static_cast<double>(v.size());
    // smallest index i with (i+1)/n >= p; the division mirrors how the ECDF
    // itself is computed, so the comparison is consistent at grid values of p
    std::size_t lo = 0;
    std::size_t hi = v.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (static_cast<double>(mid + 1) / n >= p) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return v[lo];
}

std::vector<SweepSnrRow> sweep_snr(const ScenarioConfig& cfg, ExecMode mode) {
    validate_config(cfg);
    std::vector<double> grid = cfg.snr_db_grid;
    std::sort(grid.begin(), grid.end());
    std::vector<SweepSnrRow> rows;
    rows.reserve(grid.size() * 2);
    for (double snr_db : grid) {
        const ScenarioResult res = run_scenario(cfg, snr_db, mode);
        const ErgodicCapacity ez = ergodic_capacity(res.zf);
        const ErgodicCapacity em = ergodic_capacity(res.mmse);
        rows.push_back({snr_db, "zf", ez.mean, ez.std_error,
                        quantile_at_cdf(res.zf, cfg.cdf_level), res.zf.rejected_draws});
        rows.push_back({snr_db, "mmse", em.mean, em.std_error,
                        quantile_at_cdf(res.mmse, cfg.cdf_level), res.mmse.rejected_draws});
    }
    return rows;
}

std::vector<SweepRhoRow> sweep_rho(const ScenarioConfig& cfg, double snr_db, ExecMode mode) {
    validate_config(cfg);
    std::vector<double> grid = cfg.rho_grid;
    std::sort(grid.begin(), grid.end());
    std::vector<SweepRhoRow> rows;
    rows.reserve(grid.size() * 2);
    for (double rho : grid) {
        ScenarioConfig point = cfg;  // same seed: common inner draws across rho
        point.rho_tx = rho;
        point.rho_rx = rho;
        const ScenarioResult res = run_scenario(point, snr_db, mode);
        const ErgodicCapacity ez = ergodic_capacity(res.zf);
        const ErgodicCapacity em = ergodic_capacity(res.mmse);
        rows.push_back({rho, "zf", ez.mean, ez.std_error, res.zf.rejected_draws});
        rows.push_back({rho, "mmse", em.mean, em.std_error, res.mmse.rejected_draws});
    }
    return rows;
}

}  // namespace mimocap
