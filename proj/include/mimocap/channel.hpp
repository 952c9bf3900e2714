#pragma once

#include <cstdint>
#include <string>

#include "mimocap/fading.hpp"
#include "mimocap/matkernel.hpp"

namespace mimocap {

enum class ChannelKind {
    GaussianKronecker,   // inner draw CN(0,1); default for correlation sweeps
    NakagamiKronecker,   // inner draw with Nakagami-m envelopes; coloring
                         // distorts the marginals for m != 1
};

const char* to_string(ChannelKind kind);

// Exponential antenna correlation R[i][j] = rho^|i-j| with its cached lower
// Cholesky root, so coloring a draw costs one triangular multiply per side.
struct CorrelationMatrix {
    std::size_t n;
    double rho;
    HermitianMatrix matrix;
    ComplexMatrix root;  // root * root^H = matrix

    bool is_identity() const { return rho == 0.0; }
};

/// Throws RhoOutOfRange unless 0 <= rho <= tol::kRhoMax (R is singular at
/// rho = 1, so fully correlated requests must be clamped by the caller).
CorrelationMatrix exp_correlation(std::size_t n, double rho);

// One channel draw: the uncorrelated inner matrix W and the colored channel
// H = R_rx^{1/2} W R_tx^{H/2}.
struct ChannelRealization {
    ComplexMatrix inner;
    ComplexMatrix h;
    ChannelKind kind = ChannelKind::GaussianKronecker;
    NakagamiParams params;
};

/// Color an inner draw with the given correlation roots. When both sides are
/// identity the colored channel is the inner matrix, bit for bit.
ChannelRealization build_channel(const ComplexMatrix& inner, const CorrelationMatrix& rtx,
                                 const CorrelationMatrix& rrx,
                                 ChannelKind kind = ChannelKind::GaussianKronecker,
                                 NakagamiParams params = {});

// Draws channel realizations for a fixed scenario. Correlation roots are built
// once; draw(trial, attempt) is pure in its arguments, so trials can be
// evaluated concurrently in any order. Entry power is fixed at omega = 1
// (SNR is carried by the capacity formulas, not the channel).
class ChannelSampler {
public:
    ChannelSampler(std::size_t nr, std::size_t nt, ChannelKind kind, double m,
                   double rho_rx, double rho_tx, std::uint64_t seed);

    ChannelRealization draw(std::uint64_t trial, std::uint64_t attempt = 0) const;

    const CorrelationMatrix& rtx() const { return rtx_; }
    const CorrelationMatrix& rrx() const { return rrx_; }
    std::size_t nr() const { return nr_; }
    std::size_t nt() const { return nt_; }

private:
    std::size_t nr_;
    std::size_t nt_;
    ChannelKind kind_;
    NakagamiParams params_;
    CorrelationMatrix rrx_;
    CorrelationMatrix rtx_;
    std::uint64_t seed_;
};

}  // namespace mimocap
