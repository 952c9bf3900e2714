#include "mimocap/receivers.hpp"

#include <cmath>
#include <string>

namespace mimocap {

namespace {

constexpr double kInvLn2 = 1.4426950408889634073599246810019;

double cap_bits(double snr) { return std::log1p(snr) * kInvLn2; }

HermitianMatrix gram_inverse(const HermitianMatrix& gram) {
    try {
        return inv_pd(gram);
    } catch (const NotPositiveDefinite& e) {
        throw RankDeficient(std::string("H^H H is singular: ") + e.what());
    }
}

void fill_zf(StreamMetrics& m, const HermitianMatrix& gram_inv, double rho_eff) {
    const std::vector<double> d = diag_real(gram_inv);
    m.zf_snr.resize(d.size());
    m.zf_capacity.resize(d.size());
    m.zf_total = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        m.zf_snr[k] = rho_eff / d[k];
        m.zf_capacity[k] = cap_bits(m.zf_snr[k]);
        m.zf_total += m.zf_capacity[k];
    }
}

void fill_mmse(StreamMetrics& m, const HermitianMatrix& gram, double rho_eff) {
    const HermitianMatrix binv = inv_pd(identity_plus_scaled(gram, rho_eff));
    const std::vector<double> d = diag_real(binv);
    m.mmse_sinr.resize(d.size());
    m.mmse_capacity.resize(d.size());
    m.mmse_total = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        double sinr = 1.0 / d[k] - 1.0;
        if (sinr < 0.0 && sinr > tol::kSinrClampNeg) sinr = 0.0;
        m.mmse_sinr[k] = sinr;
        m.mmse_capacity[k] = cap_bits(sinr);
        m.mmse_total += m.mmse_capacity[k];
    }
}

}  // namespace

const char* to_string(PowerSplit split) {
    switch (split) {
        case PowerSplit::PerStreamTotal: return "per-stream-total";
        case PowerSplit::PerStreamFull: return "per-stream-full";
    }
    return "unknown";
}

SnrSpec SnrSpec::from_db(double db, PowerSplit split) {
    return SnrSpec{db, std::pow(10.0, db / 10.0), split};
}

double SnrSpec::per_stream_snr(std::size_t nt) const {
    return power_split == PowerSplit::PerStreamTotal ? snr_linear / static_cast<double>(nt)
                                                     : snr_linear;
}

StreamMetrics zf_stream_capacities(const ComplexMatrix& h, const SnrSpec& snr) {
    StreamMetrics m;
    const HermitianMatrix gram = herm_gram(h);
    fill_zf(m, gram_inverse(gram), snr.per_stream_snr(h.cols()));
    return m;
}

StreamMetrics mmse_stream_capacities(const ComplexMatrix& h, const SnrSpec& snr) {
    StreamMetrics m;
    fill_mmse(m, herm_gram(h), snr.per_stream_snr(h.cols()));
    return m;
}

StreamMetrics evaluate_streams(const ComplexMatrix& h, const SnrSpec& snr) {
    const HermitianMatrix gram = herm_gram(h);
    return metrics_from_gram(gram, gram_inverse(gram), snr.per_stream_snr(h.cols()));
}

StreamMetrics metrics_from_gram(const HermitianMatrix& gram, const HermitianMatrix& gram_inv,
                                double rho_eff) {
    StreamMetrics m;
    fill_zf(m, gram_inv, rho_eff);
    fill_mmse(m, gram, rho_eff);
    return m;
}

double mmse_highsnr_capacity(const ComplexMatrix& h, const SnrSpec& snr) {
    const double rho = snr.per_stream_snr(h.cols());
    if (rho < tol::kHighSnrMinRho) {
        throw ApproximationInvalid("mmse_highsnr_capacity: per-stream SNR " +
                                   std::to_string(rho) + " below " +
                                   std::to_string(tol::kHighSnrMinRho));
    }
    const HermitianMatrix gram_inv = gram_inverse(herm_gram(h));
    const std::vector<double> d = diag_real(gram_inv);
    double total = 0.0;
    for (double dk : d) {
        const double scaled = dk / rho;  // [(rho A)^{-1}]_kk
        if (scaled >= 1.0) {
            throw ApproximationInvalid("mmse_highsnr_capacity: [(rho A)^{-1}]_kk = " +
                                       std::to_string(scaled) + " >= 1");
        }
        total += std::log2(rho / dk) - std::log2(1.0 - scaled);
    }
    return total;
}

double capacity_gap(const ComplexMatrix& h, const SnrSpec& snr) {
    const StreamMetrics m = evaluate_streams(h, snr);
    return m.mmse_total - m.zf_total;
}

double zf_corr_ratio(const ComplexMatrix& inner, const CorrelationMatrix& rtx,
                     const CorrelationMatrix& rrx, const SnrSpec& snr) {
    if (inner.rows() != inner.cols()) {
        throw DimensionMismatch("zf_corr_ratio: needs a square channel");
    }
    const ComplexMatrix colored = build_channel(inner, rtx, rrx).h;
    const double c_cor = zf_stream_capacities(colored, snr).zf_total;
    const double c_unc = zf_stream_capacities(inner, snr).zf_total;
    return c_cor / c_unc;
}

double mmse_corr_delta(const ComplexMatrix& inner, const CorrelationMatrix& rtx,
                       const CorrelationMatrix& rrx, const SnrSpec& snr) {
    if (inner.rows() != inner.cols()) {
        throw DimensionMismatch("mmse_corr_delta: needs a square channel");
    }
    const ComplexMatrix colored = build_channel(inner, rtx, rrx).h;
    const double c_unc = mmse_stream_capacities(inner, snr).mmse_total;
    const double c_cor = mmse_stream_capacities(colored, snr).mmse_total;
    return c_unc - c_cor;
}

StreamMetrics zf_stream_capacities(const ChannelRealization& real, const SnrSpec& snr) {
    return zf_stream_capacities(real.h, snr);
}
StreamMetrics mmse_stream_capacities(const ChannelRealization& real, const SnrSpec& snr) {
    return mmse_stream_capacities(real.h, snr);
}
StreamMetrics evaluate_streams(const ChannelRealization& real, const SnrSpec& snr) {
    return evaluate_streams(real.h, snr);
}
double mmse_highsnr_capacity(const ChannelRealization& real, const SnrSpec& snr) {
    return mmse_highsnr_capacity(real.h, snr);
}
double capacity_gap(const ChannelRealization& real, const SnrSpec& snr) {
    return capacity_gap(real.h, snr);
}

}  // namespace mimocap
