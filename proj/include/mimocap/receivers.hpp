#pragma once

#include <vector>

#include "mimocap/channel.hpp"
#include "mimocap/matkernel.hpp"

namespace mimocap {

enum class PowerSplit {
    PerStreamTotal,  // per-stream SNR = total SNR / N_t (equal power split)
    PerStreamFull,   // per-stream SNR = total SNR (literal sub-channel form)
};

const char* to_string(PowerSplit split);

struct SnrSpec {
    double snr_db = 0.0;
    double snr_linear = 1.0;
    PowerSplit power_split = PowerSplit::PerStreamTotal;

    static SnrSpec from_db(double db, PowerSplit split = PowerSplit::PerStreamTotal);

    double per_stream_snr(std::size_t nt) const;
};

// Per-stream post-processing SNR/SINR and capacities for one realization.
// zf_stream_capacities fills only the ZF half, mmse_stream_capacities only the
// MMSE half; evaluate_streams fills both from a single Gram factorization.
struct StreamMetrics {
    std::vector<double> zf_snr;
    std::vector<double> zf_capacity;
    std::vector<double> mmse_sinr;
    std::vector<double> mmse_capacity;
    double zf_total = 0.0;
    double mmse_total = 0.0;
};

/// ZF: stream k sees rho_eff / [(H^H H)^{-1}]_kk. Throws RankDeficient when
/// the Gram matrix is singular (N_r < N_t or a degenerate draw).
StreamMetrics zf_stream_capacities(const ComplexMatrix& h, const SnrSpec& snr);
StreamMetrics zf_stream_capacities(const ChannelRealization& real, const SnrSpec& snr);

/// MMSE: stream k sees 1/[(I + rho_eff H^H H)^{-1}]_kk - 1, which dominates
/// the ZF SNR stream by stream. Never throws for finite channels.
StreamMetrics mmse_stream_capacities(const ComplexMatrix& h, const SnrSpec& snr);
StreamMetrics mmse_stream_capacities(const ChannelRealization& real, const SnrSpec& snr);

/// Both receivers from one Gram matrix.
StreamMetrics evaluate_streams(const ComplexMatrix& h, const SnrSpec& snr);
StreamMetrics evaluate_streams(const ChannelRealization& real, const SnrSpec& snr);

/// Both receivers from a Gram matrix and its inverse already at hand.
StreamMetrics metrics_from_gram(const HermitianMatrix& gram, const HermitianMatrix& gram_inv,
                                double rho_eff);

/// Total MMSE capacity under the first-order high-SNR expansion
/// (I + rho A)^{-1} ~ (rho A)^{-1} - (rho A)^{-2}. Requires per-stream SNR
/// >= tol::kHighSnrMinRho; throws ApproximationInvalid when the expansion
/// leaves its region of validity.
double mmse_highsnr_capacity(const ComplexMatrix& h, const SnrSpec& snr);
double mmse_highsnr_capacity(const ChannelRealization& real, const SnrSpec& snr);

/// Total MMSE capacity minus total ZF capacity, exact forms on the same
/// channel. Nonnegative up to roundoff; vanishes as SNR grows.
double capacity_gap(const ComplexMatrix& h, const SnrSpec& snr);
double capacity_gap(const ChannelRealization& real, const SnrSpec& snr);

/// C_ZF(colored) / C_ZF(uncolored) on the same inner draw (paired coloring).
/// Exactly 1 when both correlation matrices are identity.
double zf_corr_ratio(const ComplexMatrix& inner, const CorrelationMatrix& rtx,
                     const CorrelationMatrix& rrx, const SnrSpec& snr);

/// C_MMSE(uncolored) - C_MMSE(colored) on the same inner draw.
double mmse_corr_delta(const ComplexMatrix& inner, const CorrelationMatrix& rtx,
                       const CorrelationMatrix& rrx, const SnrSpec& snr);

}  // namespace mimocap
