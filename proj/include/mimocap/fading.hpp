#pragma once

#include "mimocap/matkernel.hpp"
#include "mimocap/rng.hpp"

namespace mimocap {

// Nakagami fading figure m and mean-square envelope power omega = E[r^2].
// m = 1 is Rayleigh, m -> 0.5 one-sided Gaussian, m -> inf no fading.
struct NakagamiParams {
    double m = 1.0;
    double omega = 1.0;
};

void validate(const NakagamiParams& p);  // InvalidShape / DomainError

/// Draw from Gamma(shape, scale). Marsaglia-Tsang squeeze for shape >= 1,
/// boosted from shape+1 by a uniform power for 0.5 <= shape < 1.
double gamma_sample(double shape, double scale, RngStream& rng);

/// Nakagami-m envelope: r = sqrt(g), g ~ Gamma(m, omega/m), so E[r^2] = omega.
double nakagami_envelope(const NakagamiParams& p, RngStream& rng);

/// nr x nt matrix of i.i.d. circularly symmetric complex Gaussian entries,
/// unit variance per complex entry.
ComplexMatrix complex_gaussian_matrix(std::size_t nr, std::size_t nt, RngStream& rng);

/// nr x nt matrix with Nakagami-m envelopes and i.i.d. uniform phases.
/// Coincides in distribution with complex_gaussian_matrix at m = 1, omega = 1.
ComplexMatrix nakagami_entry_matrix(const NakagamiParams& p, std::size_t nr, std::size_t nt,
                                    RngStream& rng);

/// Density of the instantaneous SNR gamma under Nakagami-m fading with mean
/// SNR gbar: (1/Gamma(m)) (m/gbar)^m gamma^(m-1) exp(-m gamma / gbar).
/// Normalized to integrate to 1 over [0, inf).
double snr_pdf(double gamma, double m, double gbar);

}  // namespace mimocap
