#pragma once

#include <cstdint>
#include <vector>

#include "qcomm/linalg.hpp"

namespace qcomm {

// Qubit labels are 1-based and read left to right in ket notation:
// qubit 1 is the leftmost character of |b1 b2 ... bn> and the most
// significant bit of the amplitude index.

/// Pure state of n labeled qubits; amplitudes indexed as above.
struct Ket {
    int n_qubits = 0;
    std::vector<Complex> amplitudes;

    size_t dim() const { return amplitudes.size(); }
};

/// Bit of qubit `label` in basis-state index `idx` of an n-qubit register.
inline int qubit_bit(uint64_t idx, int label, int n) {
    return static_cast<int>((idx >> (n - label)) & 1u);
}

/// Validates length = 2^n; does not normalize.
Ket make_ket(int n_qubits, std::vector<Complex> amplitudes);

/// Computational basis state |index> on n qubits.
Ket basis_ket(int n_qubits, uint64_t index);

double norm(const Ket& k);
Ket normalized(const Ket& k);
Complex inner(const Ket& a, const Ket& b);

/// a's qubits become labels 1..nA, b's become nA+1..nA+nB.
Ket tensor(const Ket& a, const Ket& b);

/// Reorders qubits: new_order[i] is the original label that becomes
/// qubit i+1 of the result. new_order must be a permutation of 1..n.
Ket permute_qubits(const Ket& k, const std::vector<int>& new_order);

/// Applies a 2x2 operator to one labeled qubit.
Ket apply_single_qubit(const ComplexMatrix& u, int label, const Ket& k);

/// Applies a full-dimension operator.
Ket apply_matrix(const ComplexMatrix& u, const Ket& k);

/// True when |<a|b>| = 1 within tol (same ray).
bool equal_up_to_phase(const Ket& a, const Ket& b, double tol = EPS_ORTHO);

ComplexMatrix gram_matrix(const std::vector<Ket>& vectors);

// Single-qubit Pauli matrices sigma_0..sigma_3.
ComplexMatrix pauli(int k);

}  // namespace qcomm
