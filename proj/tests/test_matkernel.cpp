#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mimocap/matkernel.hpp"
#include "support.hpp"

using namespace mimocap;
using namespace testsup;

TEST_CASE("herm_gram: identity, hand-multiplied 2x2, column norm") {
    const HermitianMatrix a = herm_gram(ComplexMatrix::identity(2));
    CHECK(a(0, 0) == cxd{1.0, 0.0});
    CHECK(a(0, 1) == cxd{0.0, 0.0});
    CHECK(a(1, 1) == cxd{1.0, 0.0});

    // H = [[1,1],[0,1]] -> H^H H = [[1,1],[1,2]]
    ComplexMatrix h(2, 2);
    h(0, 0) = 1.0;
    h(0, 1) = 1.0;
    h(1, 1) = 1.0;
    const HermitianMatrix g = herm_gram(h);
    CHECK(g(0, 0).real() == doctest::Approx(1.0));
    CHECK(g(0, 1).real() == doctest::Approx(1.0));
    CHECK(g(1, 0).real() == doctest::Approx(1.0));
    CHECK(g(1, 1).real() == doctest::Approx(2.0));

    // column [3,4]^T -> [25]
    ComplexMatrix col(2, 1);
    col(0, 0) = 3.0;
    col(1, 0) = 4.0;
    const HermitianMatrix n = herm_gram(col);
    CHECK(n.n() == 1);
    CHECK(n(0, 0).real() == doctest::Approx(25.0));
}

TEST_CASE("herm_gram of random tall matrices is Hermitian and nonnegative") {
    RngStream rng(7001, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t cols = 1 + static_cast<std::size_t>(rng.uniform01() * 8);
        const std::size_t rows = cols + static_cast<std::size_t>(rng.uniform01() * 4);
        const ComplexMatrix h = random_complex(rows, cols, rng);
        const HermitianMatrix a = herm_gram(h);
        for (std::size_t i = 0; i < cols; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                CHECK(std::abs(a(i, j) - std::conj(a(j, i))) <= tol::kHermSymmetry);
            }
        }
        // x^H A x >= 0 for random probe vectors
        for (int probe = 0; probe < 100; ++probe) {
            std::vector<cxd> x(cols);
            for (auto& v : x) v = cxd{rng.normal(), rng.normal()};
            cxd q{0.0, 0.0};
            for (std::size_t i = 0; i < cols; ++i)
                for (std::size_t j = 0; j < cols; ++j) q += std::conj(x[i]) * a(i, j) * x[j];
            CHECK(q.real() >= -1e-10);
        }
    }
}

TEST_CASE("cholesky: identity, 2x2 closed form, rank-1 failure") {
    const ComplexMatrix l0 = cholesky(HermitianMatrix(ComplexMatrix::identity(3)));
    CHECK(max_abs_diff(l0, ComplexMatrix::identity(3)) == 0.0);

    // A = [[4,2],[2,2]]: l11 = sqrt(4) = 2, l21 = 2/2 = 1, l22 = sqrt(2-1) = 1
    ComplexMatrix a(2, 2);
    a(0, 0) = 4.0;
    a(0, 1) = 2.0;
    a(1, 0) = 2.0;
    a(1, 1) = 2.0;
    const ComplexMatrix l = cholesky(HermitianMatrix(a));
    CHECK(l(0, 0).real() == doctest::Approx(2.0));
    CHECK(l(1, 0).real() == doctest::Approx(1.0));
    CHECK(l(1, 1).real() == doctest::Approx(1.0));
    CHECK(l(0, 1) == cxd{0.0, 0.0});

    ComplexMatrix ones(2, 2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
    CHECK_THROWS_AS(cholesky(HermitianMatrix(ones)), NotPositiveDefinite);
}

TEST_CASE("cholesky reconstructs random PD matrices up to 16x16") {
    RngStream rng(7002, 0);
    for (std::size_t n : {1, 2, 3, 5, 8, 12, 16}) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix a = random_pd(n, rng);
            const HermitianMatrix ha(a);
            const ComplexMatrix l = cholesky(ha);
            const ComplexMatrix rec = mul_ref(l, ctrans_ref(l));
            ComplexMatrix diff(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) diff(i, j) = rec(i, j) - a(i, j);
            CHECK(frobenius_norm(diff) / frobenius_norm(a) < tol::kCholReconstruct);
            // lower triangular with positive real diagonal
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(l(i, i).real() > 0.0);
                CHECK(l(i, i).imag() == 0.0);
                for (std::size_t j = i + 1; j < n; ++j) CHECK(l(i, j) == cxd{0.0, 0.0});
            }
        }
    }
}

TEST_CASE("inv_pd: identity, 2x2 adjugate, diagonal") {
    const HermitianMatrix i3(ComplexMatrix::identity(3));
    CHECK(max_abs_diff(inv_pd(i3).mat(), ComplexMatrix::identity(3)) < 1e-15);

    // A = [[1,1],[1,2]], det = 1 -> inverse = [[2,-1],[-1,1]]
    ComplexMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    a(1, 1) = 2.0;
    const HermitianMatrix inv = inv_pd(HermitianMatrix(a));
    CHECK(inv(0, 0).real() == doctest::Approx(2.0));
    CHECK(inv(0, 1).real() == doctest::Approx(-1.0));
    CHECK(inv(1, 1).real() == doctest::Approx(1.0));

    ComplexMatrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    const HermitianMatrix dinv = inv_pd(HermitianMatrix(d));
    CHECK(dinv(0, 0).real() == doctest::Approx(0.5));
    CHECK(dinv(1, 1).real() == doctest::Approx(0.25));
    CHECK(dinv(0, 1) == cxd{0.0, 0.0});
}

TEST_CASE("inv_pd composition: ||A inv(A) - I||_max below tolerance") {
    RngStream rng(7003, 0);
    for (std::size_t n : {2, 4, 8, 16}) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix a = random_pd(n, rng);
            const HermitianMatrix inv = inv_pd(HermitianMatrix(a));
            const ComplexMatrix prod = mul_ref(a, inv.mat());
            CHECK(max_abs_diff(prod, ComplexMatrix::identity(n)) < tol::kInvResidual);
        }
    }
}

TEST_CASE("det_pd: identity, unit-det 2x2, diagonal, cofactor oracle") {
    CHECK(det_pd(HermitianMatrix(ComplexMatrix::identity(5))) == doctest::Approx(1.0));

    ComplexMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    a(1, 1) = 2.0;
    CHECK(det_pd(HermitianMatrix(a)) == doctest::Approx(1.0));

    ComplexMatrix d(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = 3.0;
    d(2, 2) = 4.0;
    CHECK(det_pd(HermitianMatrix(d)) == doctest::Approx(24.0));

    RngStream rng(7004, 0);
    for (int rep = 0; rep < 25; ++rep) {
        const ComplexMatrix m2 = random_pd(2, rng);
        const double ref2 = det2(m2).real();
        CHECK(std::abs(det_pd(HermitianMatrix(m2)) - ref2) <= 1e-10 * std::abs(ref2));
        const ComplexMatrix m3 = random_pd(3, rng);
        const double ref3 = det3(m3).real();
        CHECK(std::abs(det_pd(HermitianMatrix(m3)) - ref3) <= 1e-10 * std::abs(ref3));
    }
}

TEST_CASE("det_pd of a Gram matrix is positive whenever cholesky succeeds") {
    RngStream rng(7005, 0);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform01() * 8);
        const HermitianMatrix a = herm_gram(random_complex(n + 2, n, rng));
        bool pd = true;
        try {
            cholesky(a);
        } catch (const NotPositiveDefinite&) {
            pd = false;
        }
        if (pd) CHECK(det_pd(a) > 0.0);
    }
}

TEST_CASE("diag_real: identity, inverse example, singleton") {
    const auto d3 = diag_real(HermitianMatrix(ComplexMatrix::identity(3)));
    CHECK(d3 == std::vector<double>{1.0, 1.0, 1.0});

    ComplexMatrix a(2, 2);
    a(0, 0) = 2.0;
    a(0, 1) = -1.0;
    a(1, 0) = -1.0;
    a(1, 1) = 1.0;
    const auto d = diag_real(HermitianMatrix(a));
    CHECK(d[0] == doctest::Approx(2.0));
    CHECK(d[1] == doctest::Approx(1.0));

    ComplexMatrix s(1, 1);
    s(0, 0) = 5.0;
    CHECK(diag_real(HermitianMatrix(s)) == std::vector<double>{5.0});
}

TEST_CASE("HermitianMatrix rejects asymmetry, non-finite and non-square input") {
    ComplexMatrix bad(2, 2);
    bad(0, 0) = 1.0;
    bad(0, 1) = cxd{0.0, 1e-6};  // conj mismatch with (1,0)
    bad(1, 0) = cxd{0.0, 1e-6};
    bad(1, 1) = 1.0;
    CHECK_THROWS_AS(HermitianMatrix{bad}, DomainError);

    ComplexMatrix imdiag(1, 1);
    imdiag(0, 0) = cxd{1.0, 1e-6};  // imaginary diagonal beyond tolerance
    CHECK_THROWS_AS(HermitianMatrix{imdiag}, DomainError);

    ComplexMatrix nan(1, 1);
    nan(0, 0) = std::nan("");
    CHECK_THROWS_AS(HermitianMatrix{nan}, DomainError);

    CHECK_THROWS_AS(HermitianMatrix(ComplexMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("matmul and conj_transpose agree with reference loops") {
    RngStream rng(7006, 0);
    const ComplexMatrix a = random_complex(3, 5, rng);
    const ComplexMatrix b = random_complex(5, 2, rng);
    CHECK(max_abs_diff(matmul(a, b), mul_ref(a, b)) < 1e-12);
    CHECK(max_abs_diff(conj_transpose(a), ctrans_ref(a)) == 0.0);
    CHECK_THROWS_AS(matmul(b, a), DimensionMismatch);
}

TEST_CASE("log_det_pd stays finite where naive determinants overflow") {
    // diag(1e30, ..., 1e30) 16x16: det = 1e480 overflows double, log det is fine
    ComplexMatrix d(16, 16);
    for (std::size_t i = 0; i < 16; ++i) d(i, i) = 1e30;
    const HermitianMatrix a(d);
    CHECK(log_det_pd(a) == doctest::Approx(16 * std::log(1e30)));
    CHECK(std::isinf(det_pd(a)));  // exponentiation saturates, log form does not
}
