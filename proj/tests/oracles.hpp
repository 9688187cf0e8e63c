// Independent oracles for cross-checking the library. These deliberately use
// different algorithms and code paths than the implementations they verify.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qcomm/ket.hpp"

namespace oracle {

using qcomm::Complex;
using qcomm::ComplexMatrix;
using qcomm::Ket;

/// Eigenvalues of a real symmetric 2x2 [[a,b],[b,d]] by the quadratic
/// formula, descending.
inline std::vector<double> sym2_eigenvalues(double a, double b, double d) {
    const double mean = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    return {mean + disc, mean - disc};
}

/// Eigenvalues of a real symmetric 3x3 via the characteristic polynomial,
/// solved in closed trigonometric form; descending.
inline std::vector<double> sym3_eigenvalues(const double m[3][3]) {
    // det(M - x I) = -x^3 + c2 x^2 + c1 x + c0, rewritten x^3 + p x + q
    // after shifting by the mean of the trace.
    const double tr = m[0][0] + m[1][1] + m[2][2];
    const double q_shift = tr / 3.0;
    double b[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = m[i][j] - (i == j ? q_shift : 0.0);
    const double p1 = b[0][1] * b[0][1] + b[0][2] * b[0][2] + b[1][2] * b[1][2];
    const double p2 =
        b[0][0] * b[0][0] + b[1][1] * b[1][1] + b[2][2] * b[2][2] + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    if (p < 1e-300) return {q_shift, q_shift, q_shift};
    double det = 0.0;
    {
        double c[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c[i][j] = b[i][j] / p;
        det = c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) -
              c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0]) +
              c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0]);
    }
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q_shift + 2.0 * p * std::cos(phi);
    const double e3 = q_shift + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e2 = tr - e1 - e3;
    std::vector<double> out{e1, e2, e3};
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Eigenvalues of a Hermitian PSD matrix by power iteration with deflation;
/// descending. Suited to well-separated spectra such as reduced density
/// matrices of few-term states.
inline std::vector<double> psd_eigenvalues(ComplexMatrix a) {
    const int n = a.rows;
    std::vector<double> out;
    for (int round = 0; round < n; ++round) {
        // Deterministic start with nonzero overlap against any eigenspace.
        std::vector<Complex> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = Complex{1.0 + 0.137 * i, 0.211 * ((i * 7 + round) % 5)};
        double lambda = 0.0;
        for (int it = 0; it < 4000; ++it) {
            std::vector<Complex> w(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) w[i] += a.at(i, j) * v[j];
            double nw = 0.0;
            for (const auto& c : w) nw += std::norm(c);
            nw = std::sqrt(nw);
            if (nw < 1e-14) {
                lambda = 0.0;
                break;
            }
            for (auto& c : w) c /= nw;
            lambda = nw;
            v = std::move(w);
        }
        out.push_back(lambda);
        // Deflate: a -= lambda * v v^dagger.
        if (lambda > 0.0)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a.at(i, j) -= lambda * v[i] * std::conj(v[j]);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Partial trace by forming the full projector |psi><psi| and summing the
/// environment diagonal explicitly, bit by bit.
inline ComplexMatrix brute_partial_trace(const Ket& state, const std::vector<int>& keep) {
    const int n = state.n_qubits;
    const size_t dim = state.dim();
    const size_t kd = size_t{1} << keep.size();

    auto keep_index = [&](size_t full) {
        size_t idx = 0;
        for (int lab : keep) idx = (idx << 1) | qcomm::qubit_bit(full, lab, n);
        return idx;
    };
    auto env_index = [&](size_t full) {
        size_t idx = 0;
        for (int q = 1; q <= n; ++q) {
            bool kept = false;
            for (int lab : keep) kept |= lab == q;
            if (!kept) idx = (idx << 1) | qcomm::qubit_bit(full, q, n);
        }
        return idx;
    };

    ComplexMatrix rho(static_cast<int>(kd), static_cast<int>(kd));
    for (size_t x = 0; x < dim; ++x)
        for (size_t y = 0; y < dim; ++y) {
            if (env_index(x) != env_index(y)) continue;
            const Complex term = state.amplitudes[x] * std::conj(state.amplitudes[y]);
            rho.at(static_cast<int>(keep_index(x)), static_cast<int>(keep_index(y))) += term;
        }
    return rho;
}

inline double entropy_bits(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double l : spectrum)
        if (l > 1e-15) s -= l * std::log2(l);
    return s;
}

/// Maximum clique by exhaustive subset enumeration; adj is a symmetric
/// boolean matrix. Only sensible for small vertex counts.
inline int brute_max_clique(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (uint64_t subset = 1; subset < (uint64_t{1} << n); ++subset) {
        bool clique = true;
        for (int i = 0; i < n && clique; ++i) {
            if (!(subset >> i & 1)) continue;
            for (int j = i + 1; j < n && clique; ++j)
                if ((subset >> j & 1) && !adj[i][j]) clique = false;
        }
        if (clique) best = std::max(best, std::popcount(subset));
    }
    return best;
}

}  // namespace oracle
