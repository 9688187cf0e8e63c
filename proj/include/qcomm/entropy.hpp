#pragma once

#include <vector>

#include "qcomm/ket.hpp"

namespace qcomm {

/// Split of an n-qubit system into two disjoint, jointly exhaustive sides.
/// Labels are 1-based and stored sorted ascending.
struct Bipartition {
    int n_qubits = 0;
    std::vector<int> side_a;
    std::vector<int> side_b;

    /// Builds side_b as the complement; validates labels.
    static Bipartition from_side_a(int n_qubits, std::vector<int> side_a);
};

struct EntropyRow {
    std::vector<int> side_a;  // canonical side, contains qubit 1
    std::vector<int> side_b;
    double entropy_bits = 0.0;
};

/// One row per bipartition class up to complement symmetry
/// (2^(n-1) - 1 rows), ordered by (|side_a|, side_a lexicographic).
struct EntropyTable {
    int n_qubits = 0;
    std::vector<EntropyRow> rows;
};

/// Schmidt form sum_l c_l |left_l>|right_l> across a bipartition.
/// Coefficients are positive (entries below 1e-9 dropped), descending;
/// ties break lexicographically on the left vector's amplitudes.
struct SchmidtForm {
    std::vector<double> coefficients;
    std::vector<Ket> left_basis;   // on side_a qubits
    std::vector<Ket> right_basis;  // on side_b qubits
    Bipartition partition;

    int rank() const { return static_cast<int>(coefficients.size()); }
};

/// Reduced density matrix over `keep` (ascending label order inside the
/// result). keep must be a non-empty strict subset of 1..n.
HermitianMatrix partial_trace(const Ket& state, const std::vector<int>& keep);

/// -sum(lambda log2 lambda) in bits. Requires PSD with trace 1 within 1e-8.
double von_neumann_entropy(const HermitianMatrix& rho);

/// Entropy of the reduced state over `labels`.
double entropy_of(const Ket& state, const std::vector<int>& labels);

/// All bipartition entropies of a pure state, 2 <= n_qubits <= 8.
EntropyTable entropy_table(const Ket& state);

SchmidtForm schmidt_decompose(const Ket& state, const Bipartition& partition);

/// Rebuilds the state from a Schmidt form, qubits back in label order.
Ket schmidt_reconstruct(const SchmidtForm& form);

/// Amplitudes regrouped as a 2^|A| x 2^|B| row-major matrix.
std::vector<Complex> regroup(const Ket& state, const Bipartition& partition);

}  // namespace qcomm
