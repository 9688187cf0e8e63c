#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcomm/ket.hpp"

namespace qcomm {

/// One Pauli letter (I, X, Y or Z) per sender qubit, in ascending label order.
struct PauliString {
    std::string letters;
};

struct SdcReport {
    std::vector<int> sender_qubits;
    std::vector<PauliString> pauli_strings;  // all 4^k, lexicographic I<X<Y<Z
    std::vector<Ket> encodings;              // (P_sender (x) I_rest)|R>, same order
    std::vector<PauliString> orthogonal_set; // maximum-clique witness
    std::vector<int> witness_indices;        // into encodings, sorted ascending
    int k_orthogonal = 0;
    double capacity_cbits = 0.0;             // log2(k_orthogonal)
    double sender_entropy_bits = 0.0;
};

/// All 4^|sender| encoded states, lexicographic PauliString order.
std::vector<std::pair<PauliString, Ket>> enumerate_encodings(const Ket& resource,
                                                             const std::vector<int>& sender);

/// Exact maximum mutually-orthogonal subset (max clique of the graph with an
/// edge where |<v_i|v_j>| <= EPS_ORTHO). The witness is the lexicographically
/// smallest maximum clique as a sorted index list; the size is unique.
std::pair<int, std::vector<int>> max_orthogonal_set(const std::vector<Ket>& encodings);

SdcReport sdc_report(const Ket& resource, const std::vector<int>& sender);

/// Encodes orthogonal_set[message], decodes by maximal overlap against the
/// set. Deterministic; always returns `message` since the set is orthonormal.
int simulate_sdc_roundtrip(const SdcReport& report, int message);
int simulate_sdc_roundtrip(const Ket& resource, const std::vector<int>& sender, int message);

}  // namespace qcomm
