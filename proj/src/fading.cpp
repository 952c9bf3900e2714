#include "mimocap/fading.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mimocap {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void validate(const NakagamiParams& p) {
    if (!(p.m >= 0.5) || !std::isfinite(p.m)) {
        throw InvalidShape("NakagamiParams: m must be >= 0.5, got " + std::to_string(p.m));
    }
    if (!(p.omega > 0.0) || !std::isfinite(p.omega)) {
        throw DomainError("NakagamiParams: omega must be > 0, got " + std::to_string(p.omega));
    }
}

double gamma_sample(double shape, double scale, RngStream& rng) {
    if (!(shape >= 0.5) || !std::isfinite(shape)) {
        throw InvalidShape("gamma_sample: shape must be >= 0.5, got " + std::to_string(shape));
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("gamma_sample: scale must be > 0");
    }
    if (shape < 1.0) {
        const double g = gamma_sample(shape + 1.0, 1.0, rng);
        const double u = rng.uniform01_pos();
        return scale * g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform01_pos();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

double nakagami_envelope(const NakagamiParams& p, RngStream& rng) {
    validate(p);
    return std::sqrt(gamma_sample(p.m, p.omega / p.m, rng));
}

ComplexMatrix complex_gaussian_matrix(std::size_t nr, std::size_t nt, RngStream& rng) {
    ComplexMatrix m(nr, nt);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            // real/imag parts each have variance 1/2
            m(i, j) = cxd{rng.normal(), rng.normal()} * 0.7071067811865475244;
        }
    }
    return m;
}

ComplexMatrix nakagami_entry_matrix(const NakagamiParams& p, std::size_t nr, std::size_t nt,
                                    RngStream& rng) {
    validate(p);
    ComplexMatrix m(nr, nt);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            const double r = nakagami_envelope(p, rng);
            const double theta = kTwoPi * rng.uniform01();
            m(i, j) = cxd{r * std::cos(theta), r * std::sin(theta)};
        }
    }
    return m;
}

double snr_pdf(double gamma, double m, double gbar) {
    if (!(gamma >= 0.0)) {
        throw DomainError("snr_pdf: gamma must be >= 0, got " + std::to_string(gamma));
    }
    if (!(m >= 0.5) || !(gbar > 0.0)) {
        throw DomainError("snr_pdf: need m >= 0.5 and gbar > 0");
    }
    if (gamma == 0.0) {
        if (m > 1.0) return 0.0;
        if (m == 1.0) return 1.0 / gbar;
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(m * std::log(m / gbar) + (m - 1.0) * std::log(gamma) - m * gamma / gbar -
                    std::lgamma(m));
}

}  // namespace mimocap
