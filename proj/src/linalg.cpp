#include "qcomm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcomm {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int r, int c) { return ComplexMatrix(r, c); }

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: inner dimensions differ");
    ComplexMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out.at(j, i) = std::conj(a.at(i, j));
    return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("add: shape mismatch");
    ComplexMatrix out = a;
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
    return out;
}

ComplexMatrix scale(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (auto& e : out.entries) e *= s;
    return out;
}

std::vector<Complex> mat_apply(const ComplexMatrix& a, const std::vector<Complex>& v) {
    if (static_cast<size_t>(a.cols) != v.size())
        throw std::invalid_argument("mat_apply: dimension mismatch");
    std::vector<Complex> out(a.rows);
    for (int i = 0; i < a.rows; ++i) {
        Complex acc{};
        for (int j = 0; j < a.cols; ++j) acc += a.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const Complex aij = a.at(i, j);
            if (aij == Complex{}) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    out.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
        }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (size_t i = 0; i < a.entries.size(); ++i)
        m = std::max(m, std::abs(a.entries[i] - b.entries[i]));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& e : a.entries) s += std::norm(e);
    return std::sqrt(s);
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (a.rows != a.cols) return false;
    ComplexMatrix p = multiply(adjoint(a), a);
    return max_abs_diff(p, ComplexMatrix::identity(a.rows)) <= tol;
}

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) t += mat.at(i, i).real();
    return t;
}

HermitianMatrix HermitianMatrix::from(ComplexMatrix m, double tol) {
    if (m.rows != m.cols) throw std::invalid_argument("HermitianMatrix: not square");
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j <= i; ++j)
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > tol)
                throw std::invalid_argument("HermitianMatrix: not self-adjoint");
    return HermitianMatrix{std::move(m)};
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). Updates a (two-sided) and
// accumulates the rotation into v (right-multiplied).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a.at(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;  // a(p,q) = mag * phase
    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();

    // Zeroing a(p,q) needs tan(2theta) = -1/tau; take the root with |t| <= 1.
    const double tau = (aqq - app) / (2.0 * mag);
    double t;
    if (tau >= 0.0)
        t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Column rotation J: col_p' = c*col_p + s*conj(phase)... expressed below;
    // J = [[c, -s*phase],[s*conj(phase), c]] acting on columns (p,q).
    const int n = a.rows;
    for (int i = 0; i < n; ++i) {
        const Complex aip = a.at(i, p);
        const Complex aiq = a.at(i, q);
        a.at(i, p) = c * aip + s * std::conj(phase) * aiq;
        a.at(i, q) = -s * phase * aip + c * aiq;
    }
    for (int j = 0; j < n; ++j) {
        const Complex apj = a.at(p, j);
        const Complex aqj = a.at(q, j);
        a.at(p, j) = c * apj + s * phase * aqj;
        a.at(q, j) = -s * std::conj(phase) * apj + c * aqj;
    }
    for (int i = 0; i < v.rows; ++i) {
        const Complex vip = v.at(i, p);
        const Complex viq = v.at(i, q);
        v.at(i, p) = c * vip + s * std::conj(phase) * viq;
        v.at(i, q) = -s * phase * vip + c * viq;
    }
}

void canonicalize_phase(ComplexMatrix& vectors, int col) {
    for (int i = 0; i < vectors.rows; ++i) {
        const Complex e = vectors.at(i, col);
        if (std::abs(e) > 1e-9) {
            const Complex ph = std::conj(e) / std::abs(e);
            for (int r = 0; r < vectors.rows; ++r) vectors.at(r, col) *= ph;
            return;
        }
    }
}

}  // namespace

EigenSystem hermitian_eigen(const HermitianMatrix& m) {
    const int n = m.dim();
    ComplexMatrix a = m.mat;
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-12) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a.at(p, q)) > 0.0) jacobi_rotate(a, v, p, q);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a.at(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return diag[x] > diag[y]; });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        double lam = diag[order[k]];
        if (lam < 0.0 && lam >= -EPS_EIG) lam = 0.0;
        out.values[k] = lam;
        for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
        canonicalize_phase(out.vectors, k);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
    return hermitian_eigen(m).values;
}

ComplexMatrix gram_matrix(const std::vector<std::vector<Complex>>& vectors) {
    const int n = static_cast<int>(vectors.size());
    if (n == 0) throw std::invalid_argument("gram_matrix: empty input");
    const size_t dim = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != dim) throw std::invalid_argument("gram_matrix: dimension mismatch");
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Complex acc{};
            for (size_t k = 0; k < dim; ++k) acc += std::conj(vectors[i][k]) * vectors[j][k];
            g.at(i, j) = acc;
            if (i != j) g.at(j, i) = std::conj(acc);
        }
    return g;
}

}  // namespace qcomm
