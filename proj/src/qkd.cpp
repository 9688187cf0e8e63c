#include "qcomm/qkd.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qcomm/entropy.hpp"

namespace qcomm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Ket two_qubit(std::initializer_list<Complex> amps) { return make_ket(2, amps); }

void check_split(const Ket& state, const std::vector<int>& alice, const std::vector<int>& bob) {
    if (state.n_qubits != 4) throw std::invalid_argument("QKD scheme needs a 4-qubit state");
    if (alice.size() != 2 || bob.size() != 2)
        throw std::invalid_argument("Alice and Bob each hold two qubits");
    std::vector<int> all = alice;
    all.insert(all.end(), bob.begin(), bob.end());
    std::sort(all.begin(), all.end());
    if (all != std::vector<int>{1, 2, 3, 4})
        throw std::invalid_argument("alice and bob must partition qubits 1..4");
}

// Amplitudes regrouped to (alice, bob), 4x4 row-major.
std::vector<Complex> split_matrix(const Ket& state, const std::vector<int>& alice,
                                  const std::vector<int>& bob) {
    std::vector<int> order = alice;
    order.insert(order.end(), bob.begin(), bob.end());
    return permute_qubits(state, order).amplitudes;
}

// c(a,b) = (<A_a| (x) <B_b|) psi.
ComplexMatrix coefficient_matrix(const std::vector<Complex>& m, const std::vector<Ket>& basis_a,
                                 const std::vector<Ket>& basis_b) {
    ComplexMatrix c(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Complex acc{};
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y)
                    acc += std::conj(basis_a[a].amplitudes[x]) *
                           std::conj(basis_b[b].amplitudes[y]) *
                           m[static_cast<size_t>(x) * 4 + y];
            c.at(a, b) = acc;
        }
    return c;
}

int argmax4(const std::array<double, 4>& v, int skip = -1) {
    int best = -1;
    double best_v = -1.0;
    for (int i = 0; i < 4; ++i) {
        if (i == skip) continue;
        if (v[i] > best_v + 1e-12) {
            best_v = v[i];
            best = i;
        }
    }
    return best;
}

// Adapts the encodings of one basis family to the state: Alice encodes her
// two highest-marginal outcomes; Bob encodes, per Alice outcome, his most
// correlated one (falling back to any distinct outcome on a collision).
void adapt_encoding(const std::array<std::array<double, 4>, 4>& joint, MeasBasis& basis_a,
                    MeasBasis& basis_b) {
    std::array<double, 4> marginal{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) marginal[a] += joint[a][b];
    const int a0 = argmax4(marginal);
    const int a1 = argmax4(marginal, a0);
    int b0 = argmax4(joint[a0]);
    int b1 = argmax4(joint[a1]);
    if (b1 == b0) {
        std::array<double, 4> row = joint[a1];
        row[b0] = -1.0;
        b1 = argmax4(row);
    }
    basis_a.encoding = {-1, -1, -1, -1};
    basis_b.encoding = {-1, -1, -1, -1};
    basis_a.encoding[a0] = 0;
    basis_a.encoding[a1] = 1;
    basis_b.encoding[b0] = 0;
    basis_b.encoding[b1] = 1;
}

std::array<std::array<double, 4>, 4> joint_probabilities(const std::vector<Complex>& m,
                                                         const std::vector<Ket>& basis_a,
                                                         const std::vector<Ket>& basis_b) {
    const ComplexMatrix c = coefficient_matrix(m, basis_a, basis_b);
    std::array<std::array<double, 4>, 4> p{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) p[a][b] = std::norm(c.at(a, b));
    return p;
}

}  // namespace

MeasBasis computational_basis_2q() {
    MeasBasis b;
    b.name = "computational";
    for (int i = 0; i < 4; ++i) b.vectors.push_back(basis_ket(2, i));
    b.encoding = {0, -1, -1, 1};
    return b;
}

MeasBasis bell_basis_2q() {
    MeasBasis b;
    b.name = "bell";
    b.vectors.push_back(two_qubit({kInvSqrt2, 0.0, 0.0, kInvSqrt2}));    // Phi+
    b.vectors.push_back(two_qubit({kInvSqrt2, 0.0, 0.0, -kInvSqrt2}));   // Phi-
    b.vectors.push_back(two_qubit({0.0, kInvSqrt2, kInvSqrt2, 0.0}));    // Psi+
    b.vectors.push_back(two_qubit({0.0, kInvSqrt2, -kInvSqrt2, 0.0}));   // Psi-
    b.encoding = {0, 1, -1, -1};
    return b;
}

ComplexMatrix bell_decomposition(const Ket& state, const std::vector<int>& alice,
                                 const std::vector<int>& bob) {
    check_split(state, alice, bob);
    const MeasBasis bell = bell_basis_2q();
    return coefficient_matrix(split_matrix(state, alice, bob), bell.vectors, bell.vectors);
}

CorrelationReport correlation_check(const Ket& state, const std::vector<int>& alice,
                                    const std::vector<int>& bob, const MeasBasis& basis_a,
                                    const MeasBasis& basis_b) {
    check_split(state, alice, bob);
    CorrelationReport rep;
    rep.joint = joint_probabilities(split_matrix(state, alice, bob), basis_a.vectors,
                                    basis_b.vectors);

    double agree = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const int bit_a = basis_a.encoding[a];
            const int bit_b = basis_b.encoding[b];
            if (bit_a < 0 || bit_b < 0) continue;
            rep.encoded_submatrix[bit_a][bit_b] += rep.joint[a][b];
            rep.encoded_mass += rep.joint[a][b];
            if (bit_a == bit_b) agree += rep.joint[a][b];
        }
    rep.agreement_rate = rep.encoded_mass > 0.0 ? agree / rep.encoded_mass : 0.0;
    rep.perfectly_correlated =
        rep.encoded_mass > 1e-12 &&
        rep.encoded_submatrix[0][1] <= 1e-9 && rep.encoded_submatrix[1][0] <= 1e-9 &&
        std::abs(rep.encoded_submatrix[0][0] - rep.encoded_submatrix[1][1]) <= 1e-9;
    return rep;
}

QkdSplitCheck qkd_check_split(const Ket& state, const std::vector<int>& alice_in) {
    std::vector<int> alice = alice_in;
    std::sort(alice.begin(), alice.end());
    std::vector<int> bob;
    for (int q = 1; q <= 4; ++q)
        if (!std::binary_search(alice.begin(), alice.end(), q)) bob.push_back(q);
    check_split(state, alice, bob);

    QkdSplitCheck chk;
    chk.alice = alice;
    chk.bob = bob;
    chk.comp_a = computational_basis_2q();
    chk.comp_b = computational_basis_2q();
    chk.bell_a = bell_basis_2q();
    chk.bell_b = bell_basis_2q();

    const std::vector<Complex> m = split_matrix(state, alice, bob);
    adapt_encoding(joint_probabilities(m, chk.comp_a.vectors, chk.comp_b.vectors), chk.comp_a,
                   chk.comp_b);
    adapt_encoding(joint_probabilities(m, chk.bell_a.vectors, chk.bell_b.vectors), chk.bell_a,
                   chk.bell_b);

    chk.computational = correlation_check(state, alice, bob, chk.comp_a, chk.comp_b);
    chk.bell = correlation_check(state, alice, bob, chk.bell_a, chk.bell_b);
    chk.suitable = chk.computational.perfectly_correlated && chk.bell.perfectly_correlated;

    // Matching bases occur with probability 1/4 per family; a sifted round
    // additionally needs both outcomes encoded.
    const double mass = chk.computational.encoded_mass + chk.bell.encoded_mass;
    chk.analytic_sift_rate = 0.25 * mass;
    chk.analytic_agreement =
        mass > 0.0
            ? (chk.computational.agreement_rate * chk.computational.encoded_mass +
               chk.bell.agreement_rate * chk.bell.encoded_mass) / mass
            : 0.0;
    return chk;
}

std::optional<QkdSplitCheck> qkd_find_witness(const Ket& state) {
    for (int partner : {2, 3, 4}) {
        QkdSplitCheck chk = qkd_check_split(state, {1, partner});
        if (chk.suitable) return chk;
    }
    return std::nullopt;
}

QkdRun simulate_qkd(const Ket& state, const std::vector<int>& alice,
                    const std::vector<int>& bob, int rounds, uint64_t seed) {
    if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
    check_split(state, alice, bob);

    const QkdSplitCheck chk = qkd_check_split(state, alice);
    const MeasBasis* bases_a[2] = {&chk.comp_a, &chk.bell_a};
    const MeasBasis* bases_b[2] = {&chk.comp_b, &chk.bell_b};
    const std::vector<Complex> m = split_matrix(state, alice, bob);

    std::mt19937_64 rng(seed);
    auto coin = [&rng]() { return static_cast<int>(rng() >> 63); };
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto sample = [](const std::array<double, 4>& p, double u) {
        double cum = 0.0;
        for (int i = 0; i < 3; ++i) {
            cum += p[i];
            if (u < cum) return i;
        }
        return 3;
    };

    QkdRun run;
    run.rounds = rounds;
    run.seed = seed;
    int sifted = 0, agreed = 0;
    for (int r = 0; r < rounds; ++r) {
        const int fam_a = coin();
        const double u_a = uniform();

        // Alice's outcome probabilities and conditional Bob states.
        std::array<double, 4> pa{};
        ComplexMatrix conditional(4, 4);  // row a: Bob amplitudes given outcome a
        for (int a = 0; a < 4; ++a) {
            for (int y = 0; y < 4; ++y) {
                Complex acc{};
                for (int x = 0; x < 4; ++x)
                    acc += std::conj(bases_a[fam_a]->vectors[a].amplitudes[x]) *
                           m[static_cast<size_t>(x) * 4 + y];
                conditional.at(a, y) = acc;
                pa[a] += std::norm(acc);
            }
        }
        const int out_a = sample(pa, u_a);

        const int fam_b = coin();
        const double u_b = uniform();
        std::array<double, 4> pb{};
        for (int b = 0; b < 4; ++b) {
            Complex acc{};
            for (int y = 0; y < 4; ++y)
                acc += std::conj(bases_b[fam_b]->vectors[b].amplitudes[y]) *
                       conditional.at(out_a, y);
            pb[b] = std::norm(acc);
        }
        // Exact renormalization of the collapsed state.
        if (pa[out_a] > 0.0)
            for (auto& p : pb) p /= pa[out_a];
        const int out_b = sample(pb, u_b);

        if (fam_a != fam_b) continue;
        const int bit_a = bases_a[fam_a]->encoding[out_a];
        const int bit_b = bases_b[fam_b]->encoding[out_b];
        if (bit_a < 0 || bit_b < 0) continue;
        ++sifted;
        run.alice_key += static_cast<char>('0' + bit_a);
        run.bob_key += static_cast<char>('0' + bit_b);
        if (bit_a == bit_b) ++agreed;
    }
    run.sift_rate = static_cast<double>(sifted) / rounds;
    run.agreement_rate = sifted > 0 ? static_cast<double>(agreed) / sifted : 0.0;
    return run;
}

}  // namespace qcomm
