#pragma once

#include <cstdint>
#include <vector>

#include "qcomm/entropy.hpp"
#include "qcomm/ket.hpp"

namespace qcomm {

/// Teleport an unknown n-qubit state with m terms through `resource`,
/// with Bob holding `bob_qubits` (n labels) and Alice the rest plus the
/// input register. target_basis spans the unknown state's terms; the
/// default is the first m computational basis states.
struct TeleportTask {
    Ket resource;
    std::vector<int> bob_qubits;  // sorted ascending
    int m = 1;
    std::vector<Ket> target_basis;

    int n() const { return static_cast<int>(bob_qubits.size()); }

    /// Validates labels, m range, and target-basis orthonormality.
    static TeleportTask make(Ket resource, std::vector<int> bob_qubits, int m,
                             std::vector<Ket> target_basis = {});
};

struct FeasibilityVerdict {
    bool feasible = false;       // equals structural_ok
    double bob_entropy_bits = 0.0;
    std::vector<double> schmidt_spectrum;  // descending coefficients
    bool structural_ok = false;  // exactly m coefficients, all 1/sqrt(m)
    bool entropy_ok = false;     // |S - log2 m| <= 1e-6
};

/// Orthonormal basis for the measured register (input register then Alice's
/// resource qubits, N = resource qubit count in total) plus per-outcome
/// corrections on Bob's qubits. Outcome l = j*m+k < m*m is active.
struct MeasurementBasis {
    std::vector<Ket> vectors;            // 2^N kets, active first
    int active_count = 0;                // m^2
    std::vector<ComplexMatrix> corrections;  // m^2 unitaries on 2^n

    // Construction inputs, kept for the block-unitarity check and simulation.
    std::vector<Ket> eta;    // target basis on the input register, m kets
    std::vector<Ket> chi;    // Alice-side Schmidt basis, m kets
    std::vector<Ket> mu;     // Bob-side Schmidt basis, m kets
};

struct TeleportOutcome {
    std::vector<double> outcome_probabilities;  // over all basis vectors
    std::vector<double> per_outcome_fidelity;   // active outcomes only
    double min_fidelity = 0.0;                  // over active outcomes
    double cbits_required = 0.0;                // log2(active_count)
};

/// Schmidt test across (rest | bob_qubits): feasible iff the spectrum is
/// uniform with multiplicity exactly m.
FeasibilityVerdict check_feasibility(const TeleportTask& task);

/// Weyl (generalized-Bell) measurement basis from the proof's construction:
///   |theta_{j,k}> = (1/sqrt(m)) sum_l w^{jl} |eta_l> (x) |chi_{(l+k) mod m}>
/// completed to a full basis by Gram-Schmidt over computational vectors.
/// force builds from the top-m Schmidt vectors even when infeasible (the
/// result then fails to teleport; used to probe the converse direction).
MeasurementBasis build_measurement_basis(const TeleportTask& task, bool force = false);

/// Checks (C C^dag)_{ii',l} = delta_{ii'} for every active l, where
/// C_{ik,l} = sqrt(m) <theta_l| (|eta_i> (x) |chi_k>).
bool verify_block_unitarity(const MeasurementBasis& basis, const TeleportTask& task);

/// End-to-end run: builds |Psi><(x)|R>, measures every outcome, applies the
/// correction, and scores fidelity against sum_k alpha_k |mu_k>.
TeleportOutcome simulate_teleportation(const TeleportTask& task,
                                       const std::vector<Complex>& alpha);
TeleportOutcome simulate_teleportation(const TeleportTask& task, uint64_t seed);

/// Same, against a caller-supplied (possibly forced) basis.
TeleportOutcome simulate_with_basis(const TeleportTask& task, const MeasurementBasis& basis,
                                    const std::vector<Complex>& alpha);

/// m normalized complex coefficients, deterministic in the seed.
std::vector<Complex> random_coefficients(int m, uint64_t seed);

/// Extends an orthonormal set to a full basis of an n-qubit space by
/// Gram-Schmidt over computational vectors in index order.
std::vector<Ket> extend_to_full_basis(std::vector<Ket> partial, int n_qubits);

}  // namespace qcomm
