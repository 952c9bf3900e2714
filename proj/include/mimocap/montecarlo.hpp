#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mimocap/receivers.hpp"

namespace mimocap {

// Full specification of one simulation scenario.
struct ScenarioConfig {
    int nt = 2;
    int nr = 2;
    double m = 1.0;
    ChannelKind kind = ChannelKind::GaussianKronecker;
    double rho_tx = 0.0;
    double rho_rx = 0.0;
    double snr_db = 10.0;  // operating point for cdf and sweep-rho
    std::vector<double> snr_db_grid = {0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0};
    std::vector<double> rho_grid = {0.0, 0.2, 0.4, 0.6, 0.8, 0.95};
    long long trials = 10000;
    std::uint64_t seed = 1;
    PowerSplit power_split = PowerSplit::PerStreamTotal;
    double cdf_level = 0.8;
};

/// Throws ValidationError naming the offending field.
void validate_config(const ScenarioConfig& cfg);

ChannelSampler make_sampler(const ScenarioConfig& cfg);

/// One channel draw for (cfg, trial); deterministic in (cfg.seed, trial).
ChannelRealization draw_realization(const ScenarioConfig& cfg, std::uint64_t trial);

// Tagged collection of total-capacity draws from one ensemble.
struct CapacitySamples {
    std::string label;
    std::vector<double> values;
    long long rejected_draws = 0;
};

// The trial loop exists twice: a plain serial loop kept as the reference, and
// an OpenMP version. Per-trial random streams make both produce bit-identical
// samples; tests and the bench target compare them.
enum class ExecMode { Serial, Parallel };

struct ScenarioResult {
    CapacitySamples zf;
    CapacitySamples mmse;
};

/// Draw cfg.trials realizations and evaluate both receivers on each (paired
/// draws). Draws whose Gram matrix is singular or has 1-norm condition above
/// tol::kRejectCond1 are redrawn from a per-trial sub-stream and counted.
ScenarioResult run_scenario(const ScenarioConfig& cfg, double snr_db,
                            ExecMode mode = ExecMode::Parallel);

/// Rejection-aware single trial; both receivers on the accepted draw.
StreamMetrics run_trial(const ChannelSampler& sampler, std::uint64_t trial, const SnrSpec& snr,
                        int* rejects = nullptr);

struct ErgodicCapacity {
    double mean = 0.0;
    double std_error = 0.0;  // sample stddev / sqrt(n)
};

ErgodicCapacity ergodic_capacity(const CapacitySamples& samples);

struct CdfPoint {
    double capacity;
    double f;
};

/// Right-continuous step ECDF evaluated on an evenly spaced grid over
/// [min, max]. F is nondecreasing and ends at 1.
std::vector<CdfPoint> empirical_cdf(const CapacitySamples& samples, std::size_t points);

/// ECDF at an arbitrary point.
double ecdf_value(const CapacitySamples& samples, double x);

struct PdfBin {
    double center;
    double density;
};

/// Density-normalized histogram: sum(density * binwidth) = 1.
std::vector<PdfBin> empirical_pdf(const CapacitySamples& samples, std::size_t bins);

/// Smallest sample value v with ECDF(v) >= p (lower order statistic, the
/// value read off an ECDF plot).
double quantile_at_cdf(const CapacitySamples& samples, double p);

struct SweepSnrRow {
    double snr_db;
    std::string receiver;  // "zf" or "mmse"
    double ergodic;
    double std_error;
    double quantile;       // at cfg.cdf_level
    long long rejected;    // draws rejected at this grid point
};

/// One ensemble per SNR grid point, common seed schedule across points so the
/// same channel draws back every point. Rows ordered by SNR, zf before mmse.
std::vector<SweepSnrRow> sweep_snr(const ScenarioConfig& cfg, ExecMode mode = ExecMode::Parallel);

struct SweepRhoRow {
    double rho;
    std::string receiver;
    double ergodic;
    double std_error;
    long long rejected;
};

/// One ensemble per rho grid point at the given SNR, rho applied to both array
/// ends, common inner draws across points (paired comparison).
std::vector<SweepRhoRow> sweep_rho(const ScenarioConfig& cfg, double snr_db,
                                   ExecMode mode = ExecMode::Parallel);

}  // namespace mimocap
