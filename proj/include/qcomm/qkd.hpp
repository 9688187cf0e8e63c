#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcomm/ket.hpp"

namespace qcomm {

/// Two-qubit measurement basis with a partial outcome-to-bit encoding
/// (encoding[outcome] is 0/1, or -1 when the outcome carries no key bit).
struct MeasBasis {
    std::string name;
    std::vector<Ket> vectors;      // 4 orthonormal kets on 2 qubits
    std::array<int, 4> encoding{-1, -1, -1, -1};
};

/// {|00>,|01>,|10>,|11>} with |00> -> 0 and |11> -> 1.
MeasBasis computational_basis_2q();
/// {Phi+, Phi-, Psi+, Psi-} with Phi+ -> 0 and Phi- -> 1.
MeasBasis bell_basis_2q();

struct CorrelationReport {
    std::array<std::array<double, 4>, 4> joint{};  // P(a,b)
    std::array<std::array<double, 2>, 2> encoded_submatrix{};
    bool perfectly_correlated = false;
    double agreement_rate = 0.0;  // conditional on both outcomes encoded
    double encoded_mass = 0.0;    // probability both outcomes are encoded
};

/// Coefficients c(a,b) with state = sum c(a,b) |bell_a>_alice |bell_b>_bob.
ComplexMatrix bell_decomposition(const Ket& state, const std::vector<int>& alice,
                                 const std::vector<int>& bob);

CorrelationReport correlation_check(const Ket& state, const std::vector<int>& alice,
                                    const std::vector<int>& bob, const MeasBasis& basis_a,
                                    const MeasBasis& basis_b);

/// The two matching-basis checks on one qubit split, with encodings adapted
/// to the state: Alice's encoded outcomes are her two highest-marginal ones,
/// Bob's are the per-row most-correlated partners. Suitability is the AND of
/// the two perfectly-correlated verdicts.
struct QkdSplitCheck {
    std::vector<int> alice, bob;
    MeasBasis comp_a, comp_b, bell_a, bell_b;  // adapted encodings
    CorrelationReport computational;
    CorrelationReport bell;
    bool suitable = false;
    double analytic_agreement = 0.0;  // conditional on sifting
    double analytic_sift_rate = 0.0;
};

QkdSplitCheck qkd_check_split(const Ket& state, const std::vector<int>& alice);

/// Searches the balanced splits {1,x}|rest of a 4-qubit state for one that
/// passes both checks.
std::optional<QkdSplitCheck> qkd_find_witness(const Ket& state);

struct QkdRun {
    int rounds = 0;
    uint64_t seed = 0;
    double sift_rate = 0.0;
    double agreement_rate = 0.0;
    std::string alice_key, bob_key;
};

/// Sift-and-compare simulation. Per round, in fixed order: Alice basis (top
/// bit of one mt19937_64 draw), Alice outcome (53-bit uniform, inverse CDF),
/// Bob basis, Bob outcome. Rounds sift when the basis families match and
/// both outcomes are encoded. Deterministic in the seed.
QkdRun simulate_qkd(const Ket& state, const std::vector<int>& alice,
                    const std::vector<int>& bob, int rounds, uint64_t seed);

}  // namespace qcomm
