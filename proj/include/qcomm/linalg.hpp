#pragma once

#include <complex>
#include <vector>

namespace qcomm {

using Complex = std::complex<double>;

// Centralized numeric tolerances.
inline constexpr double EPS_ORTHO = 1e-9;   // orthogonality checks
inline constexpr double EPS_EIG = 1e-10;    // eigenvalue clamp for PSD inputs
inline constexpr double EPS_NORM = 1e-9;    // state normalization
inline constexpr double EPS_HERM = 1e-12;   // self-adjointness

/// Dense complex matrix, row-major.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> entries;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c)
        : rows(r), cols(c), entries(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Complex& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const Complex& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int r, int c);
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex s, const ComplexMatrix& a);
std::vector<Complex> mat_apply(const ComplexMatrix& a, const std::vector<Complex>& v);

/// Kronecker product; row/column counts multiply.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
bool is_unitary(const ComplexMatrix& a, double tol = EPS_ORTHO);

/// Square matrix with |a(i,j) - conj(a(j,i))| <= EPS_HERM, checked on construction.
struct HermitianMatrix {
    ComplexMatrix mat;

    int dim() const { return mat.rows; }
    double trace_real() const;

    /// Throws std::invalid_argument if m is not square or not self-adjoint.
    static HermitianMatrix from(ComplexMatrix m, double tol = EPS_HERM);
};

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Eigenvalues of a Hermitian matrix, sorted descending. Values in
/// [-EPS_EIG, 0) are clamped to zero.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);

/// Full eigen-decomposition by cyclic Jacobi rotations. Eigenvector phases
/// are canonical: the first entry above 1e-9 in magnitude is real positive.
EigenSystem hermitian_eigen(const HermitianMatrix& m);

/// G(i,j) = <v_i|v_j> for same-length complex vectors.
ComplexMatrix gram_matrix(const std::vector<std::vector<Complex>>& vectors);

}  // namespace qcomm
