// Test-side oracles and statistics helpers. Everything here is independent of
// the library's computation paths: determinants come from cofactors, CDFs from
// closed forms or quadrature, matrix products from their own loops.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "mimocap/matkernel.hpp"
#include "mimocap/rng.hpp"

namespace testsup {

using mimocap::ComplexMatrix;
using mimocap::cxd;

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

// Critical K-S distances at significance 0.01 (asymptotic c(0.01) = 1.6276).
inline double ks_crit_one_sample(std::size_t n, double c = 1.6276) {
    return c / std::sqrt(static_cast<double>(n));
}
inline double ks_crit_two_sample(std::size_t n, std::size_t m, double c = 1.6276) {
    return c * std::sqrt((static_cast<double>(n) + static_cast<double>(m)) /
                         (static_cast<double>(n) * static_cast<double>(m)));
}

// Composite Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::size_t intervals) {
    if (intervals % 2) ++intervals;
    const double h = (b - a) / static_cast<double>(intervals);
    double s = f(a) + f(b);
    for (std::size_t i = 1; i < intervals; ++i) {
        s += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

// Cofactor determinants for 2x2 / 3x3 complex matrices.
inline cxd det2(const ComplexMatrix& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}
inline cxd det3(const ComplexMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Plain-loop product and conjugate transpose, independent of the library.
inline ComplexMatrix mul_ref(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cxd s{0.0, 0.0};
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}
inline ComplexMatrix ctrans_ref(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

// Random positive-definite Hermitian matrix built as L L^H + eps I from a
// random complex lower-triangular L with positive diagonal.
inline ComplexMatrix random_pd(std::size_t n, mimocap::RngStream& rng, double diag_boost = 0.5) {
    ComplexMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) l(i, j) = cxd{rng.normal(), rng.normal()};
        l(i, i) = diag_boost + std::abs(rng.normal()) + 0.1;
    }
    return mul_ref(l, ctrans_ref(l));
}

inline ComplexMatrix random_complex(std::size_t rows, std::size_t cols, mimocap::RngStream& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = cxd{rng.normal(), rng.normal()};
    return m;
}

// Closed-form CDFs used as distribution oracles.
inline double exponential_cdf(double x, double rate = 1.0) {
    return x <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * x);
}
inline double rayleigh_envelope_cdf(double r, double omega = 1.0) {
    return r <= 0.0 ? 0.0 : 1.0 - std::exp(-r * r / omega);
}
// Gamma(k integer, scale) = Erlang: P(X <= x) = 1 - e^{-x/s} sum_{i<k} (x/s)^i / i!
inline double erlang_cdf(double x, int k, double scale) {
    if (x <= 0.0) return 0.0;
    const double z = x / scale;
    double term = 1.0;
    double sum = 1.0;
    for (int i = 1; i < k; ++i) {
        term *= z / static_cast<double>(i);
        sum += term;
    }
    return 1.0 - std::exp(-z) * sum;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

}  // namespace testsup
