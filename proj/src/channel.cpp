#include "mimocap/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace mimocap {

const char* to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::GaussianKronecker: return "gaussian-kronecker";
        case ChannelKind::NakagamiKronecker: return "nakagami-kronecker";
    }
    return "unknown";
}

CorrelationMatrix exp_correlation(std::size_t n, double rho) {
    if (n < 1) throw DimensionMismatch("exp_correlation: n must be >= 1");
    if (!(rho >= 0.0) || rho > tol::kRhoMax) {
        throw RhoOutOfRange("exp_correlation: rho must be in [0, " +
                            std::to_string(tol::kRhoMax) + "], got " + std::to_string(rho));
    }
    ComplexMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = (i == j) ? 1.0 : std::pow(rho, std::abs(double(i) - double(j)));
        }
    }
    HermitianMatrix matrix(std::move(r));
    ComplexMatrix root = cholesky(matrix);
    return CorrelationMatrix{n, rho, std::move(matrix), std::move(root)};
}

ChannelRealization build_channel(const ComplexMatrix& inner, const CorrelationMatrix& rtx,
                                 const CorrelationMatrix& rrx, ChannelKind kind,
                                 NakagamiParams params) {
    if (rrx.n != inner.rows() || rtx.n != inner.cols()) {
        throw DimensionMismatch("build_channel: inner is " + std::to_string(inner.rows()) + "x" +
                                std::to_string(inner.cols()) + " but roots are " +
                                std::to_string(rrx.n) + " (rx) and " + std::to_string(rtx.n) +
                                " (tx)");
    }
    ChannelRealization real;
    real.inner = inner;
    real.kind = kind;
    real.params = params;
    if (rtx.is_identity() && rrx.is_identity()) {
        real.h = inner;  // bit-identical by contract
    } else {
        real.h = matmul(matmul(rrx.root, inner), conj_transpose(rtx.root));
    }
    if (!real.h.all_finite()) {
        throw DomainError("build_channel: colored channel has non-finite entries");
    }
    return real;
}

ChannelSampler::ChannelSampler(std::size_t nr, std::size_t nt, ChannelKind kind, double m,
                               double rho_rx, double rho_tx, std::uint64_t seed)
    : nr_(nr),
      nt_(nt),
      kind_(kind),
      params_{m, 1.0},
      rrx_(exp_correlation(nr, rho_rx)),
      rtx_(exp_correlation(nt, rho_tx)),
      seed_(seed) {
    if (kind_ == ChannelKind::NakagamiKronecker) validate(params_);
}

ChannelRealization ChannelSampler::draw(std::uint64_t trial, std::uint64_t attempt) const {
    // Sub-streams for rejected draws share the trial index, so the redraw
    // policy never disturbs other trials' streams.
    RngStream rng(seed_, (trial << 8) | (attempt & 0xFF));
    ComplexMatrix inner = (kind_ == ChannelKind::GaussianKronecker)
                              ? complex_gaussian_matrix(nr_, nt_, rng)
                              : nakagami_entry_matrix(params_, nr_, nt_, rng);
    return build_channel(inner, rtx_, rrx_, kind_, params_);
}

}  // namespace mimocap
