#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mimocap/errors.hpp"
#include "mimocap/tolerances.hpp"

namespace mimocap {

using cxd = std::complex<double>;

// Dense row-major complex matrix. Sized for antenna-array dimensions, so no
// attempt is made at blocking or SIMD; every kernel below is a plain loop.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cxd& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    cxd operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    const std::vector<cxd>& entries() const { return e_; }

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxd> e_;
};

// Bitwise comparison, used by determinism tests.
bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conj_transpose(const ComplexMatrix& a);
double norm1(const ComplexMatrix& a);            // max absolute column sum
double frobenius_norm(const ComplexMatrix& a);

// Square matrix equal to its conjugate transpose within tol::kHermSymmetry.
// Construction validates squareness, finiteness and symmetry; the diagonal of
// an accepted matrix is real to within the same tolerance.
class HermitianMatrix {
public:
    explicit HermitianMatrix(ComplexMatrix m);

    std::size_t n() const { return m_.rows(); }
    const ComplexMatrix& mat() const { return m_; }
    cxd operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
    ComplexMatrix m_;
};

/// H^H H, symmetrized as (A + A^H)/2 to suppress roundoff drift.
HermitianMatrix herm_gram(const ComplexMatrix& h);

/// Lower-triangular L with L L^H = A and positive real diagonal.
/// Throws NotPositiveDefinite when a pivot falls below
/// tol::kCholPivotRel * (trace/n).
ComplexMatrix cholesky(const HermitianMatrix& a);

/// Inverse of a positive-definite matrix via its Cholesky factor.
HermitianMatrix inv_pd(const HermitianMatrix& a);

/// log det A, accumulated from the Cholesky diagonal.
double log_det_pd(const HermitianMatrix& a);

/// det A = exp(log_det_pd(A)); the log-domain route keeps 16x16 high-power
/// products inside double range.
double det_pd(const HermitianMatrix& a);

/// Real parts of the diagonal. Throws NonRealDiagonal if any imaginary
/// residue exceeds tol::kDiagImag.
std::vector<double> diag_real(const HermitianMatrix& a);

/// I + scale * A (Hermitian for real scale).
HermitianMatrix identity_plus_scaled(const HermitianMatrix& a, double scale);

/// 1-norm condition number ||A||_1 ||A^-1||_1, exact (the inverse is formed).
double cond1_pd(const HermitianMatrix& a);

/// Same, reusing an inverse already at hand.
double cond1_from(const HermitianMatrix& a, const HermitianMatrix& ainv);

}  // namespace mimocap
