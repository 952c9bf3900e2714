#include "mimocap/matkernel.hpp"

#include <cmath>
#include <string>

namespace mimocap {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, cxd{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw DimensionMismatch("ComplexMatrix: rows and cols must be >= 1");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cxd& v : e_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.entries() == b.entries();
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: inner dimensions disagree (" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cxd aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t(j, i) = std::conj(a(i, j));
        }
    }
    return t;
}

double norm1(const ComplexMatrix& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cxd& v : a.entries()) s += std::norm(v);
    return std::sqrt(s);
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw DimensionMismatch("HermitianMatrix: matrix must be square");
    }
    if (!m_.all_finite()) {
        throw DomainError("HermitianMatrix: entries must be finite");
    }
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        for (std::size_t j = i; j < m_.cols(); ++j) {
            if (std::abs(m_(i, j) - std::conj(m_(j, i))) > tol::kHermSymmetry) {
                throw DomainError("HermitianMatrix: A != A^H beyond tolerance");
            }
        }
    }
}

HermitianMatrix herm_gram(const ComplexMatrix& h) {
    const std::size_t n = h.cols();
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cxd s{0.0, 0.0};
            for (std::size_t k = 0; k < h.rows(); ++k) {
                s += std::conj(h(k, i)) * h(k, j);
            }
            a(i, j) = s;
        }
    }
    // (A + A^H)/2: the diagonal comes out exactly real.
    ComplexMatrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sym(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    return HermitianMatrix(std::move(sym));
}

ComplexMatrix cholesky(const HermitianMatrix& a) {
    const std::size_t n = a.n();
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i).real();
    const double pivot_floor = tol::kCholPivotRel * (trace / static_cast<double>(n));

    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > pivot_floor)) {
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(d) +
                                      " at column " + std::to_string(j));
        }
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cxd s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / ljj;
        }
    }
    return l;
}

namespace {

// Solve L y = b in place, L lower triangular.
void forward_solve(const ComplexMatrix& l, std::vector<cxd>& b) {
    const std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i) {
        cxd s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
        b[i] = s / l(i, i);
    }
}

// Solve L^H x = y in place.
void backward_solve(const ComplexMatrix& l, std::vector<cxd>& y) {
    const std::size_t n = l.rows();
    for (std::size_t ii = n; ii-- > 0;) {
        cxd s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(l(k, ii)) * y[k];
        y[ii] = s / l(ii, ii);
    }
}

}  // namespace

HermitianMatrix inv_pd(const HermitianMatrix& a) {
    const std::size_t n = a.n();
    const ComplexMatrix l = cholesky(a);
    ComplexMatrix x(n, n);
    std::vector<cxd> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = (i == j) ? cxd{1.0, 0.0} : cxd{0.0, 0.0};
        forward_solve(l, col);
        backward_solve(l, col);
        for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
    }
    ComplexMatrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sym(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
        }
    }
    return HermitianMatrix(std::move(sym));
}

double log_det_pd(const HermitianMatrix& a) {
    const ComplexMatrix l = cholesky(a);
    double s = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i) s += std::log(l(i, i).real());
    return 2.0 * s;
}

double det_pd(const HermitianMatrix& a) { return std::exp(log_det_pd(a)); }

std::vector<double> diag_real(const HermitianMatrix& a) {
    std::vector<double> d(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
        const cxd v = a(i, i);
        if (std::abs(v.imag()) > tol::kDiagImag) {
            throw NonRealDiagonal("diag_real: imaginary residue " + std::to_string(v.imag()) +
                                  " at index " + std::to_string(i));
        }
        d[i] = v.real();
    }
    return d;
}

HermitianMatrix identity_plus_scaled(const HermitianMatrix& a, double scale) {
    const std::size_t n = a.n();
    ComplexMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) b(i, j) = scale * a(i, j);
        b(i, i) += 1.0;
    }
    return HermitianMatrix(std::move(b));
}

double cond1_pd(const HermitianMatrix& a) { return cond1_from(a, inv_pd(a)); }

double cond1_from(const HermitianMatrix& a, const HermitianMatrix& ainv) {
    return norm1(a.mat()) * norm1(ainv.mat());
}

}  // namespace mimocap
