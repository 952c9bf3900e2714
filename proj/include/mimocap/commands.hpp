#pragma once

#include <filesystem>
#include <vector>

#include "mimocap/run_io.hpp"

namespace mimocap {

struct RunOptions {
    std::filesystem::path out_dir = ".";
    ExecMode mode = ExecMode::Parallel;
};

// Each command writes its CSV outputs plus <command>.manifest.json into
// out_dir and returns the paths written (manifest last). Re-running a command
// with its manifest as the config reproduces the CSV bytes exactly.

std::vector<std::filesystem::path> cmd_sweep_snr(const ParsedConfig& parsed,
                                                 const RunOptions& opts);

std::vector<std::filesystem::path> cmd_sweep_rho(const ParsedConfig& parsed,
                                                 const RunOptions& opts);

/// ECDF and density histogram of both receivers' total capacity at the
/// configured operating SNR (one file per receiver and view).
std::vector<std::filesystem::path> cmd_cdf(const ParsedConfig& parsed, const RunOptions& opts);

/// Quantile comparison of 4x4/8x8 ZF/MMSE systems against the built-in
/// reference capacity table, over a candidate SNR grid; reports the SNR that
/// fits the references best. Uses the config grid when one was given
/// explicitly, otherwise 0..40 dB in 1 dB steps.
std::vector<std::filesystem::path> cmd_table1(const ParsedConfig& parsed, const RunOptions& opts);

}  // namespace mimocap
