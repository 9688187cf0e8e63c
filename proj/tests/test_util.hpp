#pragma once

#include <random>

#include "qcomm/ket.hpp"

namespace testutil {

using qcomm::Complex;
using qcomm::ComplexMatrix;
using qcomm::Ket;

inline Ket random_state(int n_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> a(size_t{1} << n_qubits);
    double norm_sq = 0.0;
    for (auto& c : a) {
        c = Complex{gauss(rng), gauss(rng)};
        norm_sq += std::norm(c);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& c : a) c *= scale;
    return qcomm::make_ket(n_qubits, std::move(a));
}

/// Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix u(dim, dim);
    for (int col = 0; col < dim; ++col) {
        std::vector<Complex> v(dim);
        for (auto& c : v) c = Complex{gauss(rng), gauss(rng)};
        for (int prev = 0; prev < col; ++prev) {
            Complex ov{};
            for (int i = 0; i < dim; ++i) ov += std::conj(u.at(i, prev)) * v[i];
            for (int i = 0; i < dim; ++i) v[i] -= ov * u.at(i, prev);
        }
        double nrm = 0.0;
        for (const auto& c : v) nrm += std::norm(c);
        nrm = std::sqrt(nrm);
        for (int i = 0; i < dim; ++i) u.at(i, col) = v[i] / nrm;
    }
    return u;
}

inline ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix h(dim, dim);
    for (int i = 0; i < dim; ++i) {
        h.at(i, i) = gauss(rng);
        for (int j = i + 1; j < dim; ++j) {
            const Complex z{gauss(rng), gauss(rng)};
            h.at(i, j) = z;
            h.at(j, i) = std::conj(z);
        }
    }
    return h;
}

}  // namespace testutil
