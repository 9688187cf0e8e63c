#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qcomm/ket.hpp"
#include "qcomm/linalg.hpp"
#include "test_util.hpp"

using namespace qcomm;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("tensor product identities") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix i4 = tensor_product(i2, i2);
    CHECK(max_abs_diff(i4, ComplexMatrix::identity(4)) == 0.0);

    // sigma_1 (x) sigma_1 flips both qubits: |00> -> |11>
    const ComplexMatrix xx = tensor_product(pauli(1), pauli(1));
    const Ket k00 = basis_ket(2, 0);
    const Ket flipped = apply_matrix(xx, k00);
    CHECK(std::abs(flipped.amplitudes[3] - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(flipped.amplitudes[0]) < 1e-15);

    // sigma_3 (x) sigma_0 puts a phase on the first qubit only.
    const ComplexMatrix zi = tensor_product(pauli(3), pauli(0));
    const double r = 1.0 / std::sqrt(2.0);
    const Ket bell = make_ket(2, {r, 0.0, 0.0, r});
    const Ket phased = apply_matrix(zi, bell);
    CHECK(std::abs(phased.amplitudes[0] - Complex{r, 0.0}) < 1e-15);
    CHECK(std::abs(phased.amplitudes[3] - Complex{-r, 0.0}) < 1e-15);
}

TEST_CASE("tensor product mixed-product and associativity on random probes") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_matrix = [&](int r, int c) {
        ComplexMatrix m(r, c);
        for (auto& e : m.entries) e = Complex{gauss(rng), gauss(rng)};
        return m;
    };
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix a = random_matrix(2, 2), c = random_matrix(2, 2);
        const ComplexMatrix b = random_matrix(3, 3), d = random_matrix(3, 3);
        const ComplexMatrix lhs = multiply(tensor_product(a, b), tensor_product(c, d));
        const ComplexMatrix rhs = tensor_product(multiply(a, c), multiply(b, d));
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);

        const ComplexMatrix e = random_matrix(2, 2);
        const ComplexMatrix left = tensor_product(tensor_product(a, b), e);
        const ComplexMatrix right = tensor_product(a, tensor_product(b, e));
        CHECK(max_abs_diff(left, right) < 1e-12);
    }
}

TEST_CASE("hermitian eigenvalues on known matrices") {
    SUBCASE("already diagonal") {
        ComplexMatrix d(2, 2);
        d.at(0, 0) = 0.75;
        d.at(1, 1) = 0.25;
        const auto vals = hermitian_eigenvalues(HermitianMatrix::from(d));
        REQUIRE(vals.size() == 2);
        CHECK(vals[0] == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(vals[1] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("rank-1 projector") {
        const ComplexMatrix p = mat2(0.5, 0.5, 0.5, 0.5);
        const auto vals = hermitian_eigenvalues(HermitianMatrix::from(p));
        CHECK(vals[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(vals[1]) < 1e-12);
    }
    SUBCASE("3x3 against the characteristic-polynomial oracle") {
        const double raw[3][3] = {{0.5, 0.25, 0.0}, {0.25, 0.25, 0.0}, {0.0, 0.0, 0.25}};
        ComplexMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = raw[i][j];
        const auto vals = hermitian_eigenvalues(HermitianMatrix::from(m));
        const auto expected = oracle::sym3_eigenvalues(raw);
        REQUIRE(vals.size() == 3);
        for (int i = 0; i < 3; ++i) CHECK(vals[i] == doctest::Approx(expected[i]).epsilon(1e-10));
        // Frozen oracle values: (3 +- sqrt(5))/8 and 1/4.
        CHECK(vals[0] == doctest::Approx(0.6545084972).epsilon(1e-9));
        CHECK(vals[1] == doctest::Approx(0.25).epsilon(1e-9));
        CHECK(vals[2] == doctest::Approx(0.0954915028).epsilon(1e-9));
    }
}

TEST_CASE("eigenvalue sum equals trace and non-Hermitian input is rejected") {
    std::mt19937_64 rng(11);
    for (int dim : {2, 3, 5, 8}) {
        const ComplexMatrix h = testutil::random_hermitian(dim, rng);
        const auto hm = HermitianMatrix::from(h);
        const auto vals = hermitian_eigenvalues(hm);
        double sum = 0.0;
        for (double v : vals) sum += v;
        CHECK(sum == doctest::Approx(hm.trace_real()).epsilon(1e-10));
    }
    ComplexMatrix bad(2, 2);
    bad.at(0, 1) = 1.0;  // not self-adjoint
    CHECK_THROWS_AS(HermitianMatrix::from(bad), std::invalid_argument);
    CHECK_THROWS_AS(HermitianMatrix::from(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("eigen-decomposition reconstructs random Hermitian matrices") {
    std::mt19937_64 rng(13);
    for (int dim : {2, 4, 7, 16}) {
        const ComplexMatrix h = testutil::random_hermitian(dim, rng);
        const EigenSystem eig = hermitian_eigen(HermitianMatrix::from(h));
        ComplexMatrix rebuilt(dim, dim);
        for (int k = 0; k < dim; ++k)
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    rebuilt.at(i, j) +=
                        eig.values[k] * eig.vectors.at(i, k) * std::conj(eig.vectors.at(j, k));
        CHECK(max_abs_diff(rebuilt, h) < 1e-9);
        CHECK(is_unitary(eig.vectors, 1e-9));
    }
}

TEST_CASE("eigenvalues invariant under unitary conjugation") {
    std::mt19937_64 rng(17);
    for (int dim : {2, 4, 6}) {
        const ComplexMatrix h = testutil::random_hermitian(dim, rng);
        const ComplexMatrix u = testutil::random_unitary(dim, rng);
        const ComplexMatrix conj_h = multiply(multiply(u, h), adjoint(u));
        const auto v1 = hermitian_eigenvalues(HermitianMatrix::from(h));
        const auto v2 = hermitian_eigenvalues(HermitianMatrix::from(conj_h, 1e-10));
        for (int i = 0; i < dim; ++i) CHECK(std::abs(v1[i] - v2[i]) < 1e-9);
    }
}

TEST_CASE("gram matrix basics") {
    const Ket k0 = basis_ket(1, 0), k1 = basis_ket(1, 1);
    const double r = 1.0 / std::sqrt(2.0);
    const Ket plus = make_ket(1, {r, r});

    const ComplexMatrix g1 = gram_matrix(std::vector<Ket>{k0, k1});
    CHECK(max_abs_diff(g1, ComplexMatrix::identity(2)) < 1e-15);

    const ComplexMatrix g2 = gram_matrix(std::vector<Ket>{k0, k0});
    for (const auto& e : g2.entries) CHECK(std::abs(e - Complex{1.0, 0.0}) < 1e-15);

    const ComplexMatrix g3 = gram_matrix(std::vector<Ket>{k0, plus});
    CHECK(std::abs(g3.at(0, 1) - Complex{r, 0.0}) < 1e-15);
    CHECK(std::abs(g3.at(1, 0) - Complex{r, 0.0}) < 1e-15);

    CHECK_THROWS_AS(gram_matrix(std::vector<Ket>{k0, basis_ket(2, 0)}), std::invalid_argument);
}
