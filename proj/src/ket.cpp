#include "qcomm/ket.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcomm {

Ket make_ket(int n_qubits, std::vector<Complex> amplitudes) {
    if (n_qubits < 1) throw std::invalid_argument("make_ket: need at least one qubit");
    if (amplitudes.size() != (size_t{1} << n_qubits))
        throw std::invalid_argument("make_ket: amplitude count is not 2^n");
    return Ket{n_qubits, std::move(amplitudes)};
}

Ket basis_ket(int n_qubits, uint64_t index) {
    std::vector<Complex> a(size_t{1} << n_qubits);
    a[index] = 1.0;
    return Ket{n_qubits, std::move(a)};
}

double norm(const Ket& k) {
    double s = 0.0;
    for (const auto& c : k.amplitudes) s += std::norm(c);
    return std::sqrt(s);
}

Ket normalized(const Ket& k) {
    const double n = norm(k);
    if (n <= 1e-12) throw std::invalid_argument("normalized: zero vector");
    Ket out = k;
    for (auto& c : out.amplitudes) c /= n;
    return out;
}

Complex inner(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    Complex acc{};
    for (size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return acc;
}

Ket tensor(const Ket& a, const Ket& b) {
    Ket out;
    out.n_qubits = a.n_qubits + b.n_qubits;
    out.amplitudes.resize(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); ++i) {
        if (a.amplitudes[i] == Complex{}) continue;
        for (size_t j = 0; j < b.dim(); ++j)
            out.amplitudes[i * b.dim() + j] = a.amplitudes[i] * b.amplitudes[j];
    }
    return out;
}

Ket permute_qubits(const Ket& k, const std::vector<int>& new_order) {
    const int n = k.n_qubits;
    if (static_cast<int>(new_order.size()) != n)
        throw std::invalid_argument("permute_qubits: order length mismatch");
    std::vector<bool> seen(n + 1, false);
    for (int lab : new_order) {
        if (lab < 1 || lab > n || seen[lab])
            throw std::invalid_argument("permute_qubits: not a permutation of 1..n");
        seen[lab] = true;
    }
    Ket out;
    out.n_qubits = n;
    out.amplitudes.resize(k.dim());
    for (uint64_t idx = 0; idx < k.dim(); ++idx) {
        uint64_t dst = 0;
        for (int pos = 0; pos < n; ++pos)
            dst |= static_cast<uint64_t>(qubit_bit(idx, new_order[pos], n)) << (n - 1 - pos);
        out.amplitudes[dst] = k.amplitudes[idx];
    }
    return out;
}

Ket apply_single_qubit(const ComplexMatrix& u, int label, const Ket& k) {
    if (u.rows != 2 || u.cols != 2)
        throw std::invalid_argument("apply_single_qubit: operator must be 2x2");
    if (label < 1 || label > k.n_qubits)
        throw std::invalid_argument("apply_single_qubit: label out of range");
    const uint64_t mask = uint64_t{1} << (k.n_qubits - label);
    Ket out = k;
    for (uint64_t idx = 0; idx < k.dim(); ++idx) {
        if (idx & mask) continue;  // handle each (0,1) pair once
        const Complex a0 = k.amplitudes[idx];
        const Complex a1 = k.amplitudes[idx | mask];
        out.amplitudes[idx] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
        out.amplitudes[idx | mask] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
    }
    return out;
}

Ket apply_matrix(const ComplexMatrix& u, const Ket& k) {
    if (static_cast<size_t>(u.cols) != k.dim())
        throw std::invalid_argument("apply_matrix: dimension mismatch");
    Ket out = k;
    out.amplitudes = mat_apply(u, k.amplitudes);
    return out;
}

bool equal_up_to_phase(const Ket& a, const Ket& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return std::abs(std::abs(inner(a, b)) - 1.0) <= tol;
}

ComplexMatrix gram_matrix(const std::vector<Ket>& vectors) {
    std::vector<std::vector<Complex>> raw;
    raw.reserve(vectors.size());
    for (const auto& v : vectors) raw.push_back(v.amplitudes);
    return gram_matrix(raw);
}

ComplexMatrix pauli(int k) {
    ComplexMatrix m(2, 2);
    switch (k) {
        case 0: m.at(0, 0) = 1.0; m.at(1, 1) = 1.0; break;
        case 1: m.at(0, 1) = 1.0; m.at(1, 0) = 1.0; break;
        case 2: m.at(0, 1) = Complex{0.0, -1.0}; m.at(1, 0) = Complex{0.0, 1.0}; break;
        case 3: m.at(0, 0) = 1.0; m.at(1, 1) = -1.0; break;
        default: throw std::invalid_argument("pauli: index must be 0..3");
    }
    return m;
}

}  // namespace qcomm
