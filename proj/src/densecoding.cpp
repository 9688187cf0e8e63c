#include "qcomm/densecoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qcomm/entropy.hpp"

namespace qcomm {

namespace {

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

// Fixed-capacity bitset over words, sized at runtime.
struct Bits {
    std::vector<uint64_t> w;

    explicit Bits(int nwords = 0) : w(nwords, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    int first() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return static_cast<int>(k * 64 + std::countr_zero(w[k]));
        return -1;
    }
    Bits and_with(const Bits& o) const {
        Bits out(static_cast<int>(w.size()));
        for (size_t k = 0; k < w.size(); ++k) out.w[k] = w[k] & o.w[k];
        return out;
    }
};

// Exact maximum clique by branch and bound (candidate-count pruning),
// optionally stopping once `target` is reached.
struct MaxClique {
    const std::vector<Bits>& adj;
    int best = 0;
    int target;

    MaxClique(const std::vector<Bits>& a, int tgt) : adj(a), target(tgt) {}

    void expand(Bits p, int rsize) {
        best = std::max(best, rsize);
        if (best >= target) return;
        while (p.any()) {
            if (rsize + p.count() <= best) return;
            const int v = p.first();
            p.clear(v);
            expand(p.and_with(adj[v]), rsize + 1);
            if (best >= target) return;
        }
    }
};

int max_clique_size(const std::vector<Bits>& adj, const Bits& candidates, int target) {
    MaxClique mc(adj, target);
    mc.expand(candidates, 0);
    return mc.best;
}

}  // namespace

std::vector<std::pair<PauliString, Ket>> enumerate_encodings(const Ket& resource,
                                                             const std::vector<int>& sender_in) {
    const int n = resource.n_qubits;
    std::vector<int> sender = sender_in;
    std::sort(sender.begin(), sender.end());
    if (sender.empty() || static_cast<int>(sender.size()) >= n)
        throw std::invalid_argument("sender must be a non-empty strict subset of the qubits");
    for (size_t i = 0; i < sender.size(); ++i) {
        if (sender[i] < 1 || sender[i] > n)
            throw std::invalid_argument("sender qubit label out of range");
        if (i > 0 && sender[i] == sender[i - 1])
            throw std::invalid_argument("duplicate sender qubit label");
    }

    const int k = static_cast<int>(sender.size());
    const ComplexMatrix paulis[4] = {pauli(0), pauli(1), pauli(2), pauli(3)};
    std::vector<std::pair<PauliString, Ket>> out;
    out.reserve(size_t{1} << (2 * k));
    for (uint64_t code = 0; code < (uint64_t{1} << (2 * k)); ++code) {
        PauliString ps;
        ps.letters.resize(k);
        Ket state = resource;
        for (int j = 0; j < k; ++j) {
            // First letter (most significant base-4 digit) acts on the
            // smallest sender label.
            const int idx = static_cast<int>((code >> (2 * (k - 1 - j))) & 3u);
            ps.letters[j] = kLetters[idx];
            if (idx != 0) state = apply_single_qubit(paulis[idx], sender[j], state);
        }
        out.emplace_back(std::move(ps), std::move(state));
    }
    return out;
}

std::pair<int, std::vector<int>> max_orthogonal_set(const std::vector<Ket>& encodings) {
    const int n = static_cast<int>(encodings.size());
    if (n == 0) throw std::invalid_argument("max_orthogonal_set: empty input");
    const ComplexMatrix g = gram_matrix(encodings);

    const int words = (n + 63) / 64;
    std::vector<Bits> adj(n, Bits(words));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(g.at(i, j)) <= EPS_ORTHO) {
                adj[i].set(j);
                adj[j].set(i);
            }

    // False-twin reduction: non-adjacent vertices with identical
    // neighborhoods belong to the same orthogonality class; a maximum clique
    // never holds two of them and the lexicographically smallest witness uses
    // the smallest index, so keeping one representative per class is exact.
    std::vector<int> reps;
    std::vector<bool> dropped(n, false);
    for (int u = 0; u < n; ++u) {
        if (dropped[u]) continue;
        reps.push_back(u);
        for (int v = u + 1; v < n; ++v) {
            if (dropped[v] || adj[u].test(v)) continue;
            bool same = true;
            for (int k = 0; k < words && same; ++k) {
                uint64_t diff = adj[u].w[k] ^ adj[v].w[k];
                if (k == (u >> 6)) diff &= ~(uint64_t{1} << (u & 63));
                if (k == (v >> 6)) diff &= ~(uint64_t{1} << (v & 63));
                same = diff == 0;
            }
            if (same) dropped[v] = true;
        }
    }

    const int r = static_cast<int>(reps.size());
    const int rwords = (r + 63) / 64;
    std::vector<Bits> radj(r, Bits(rwords));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (adj[reps[i]].test(reps[j])) {
                radj[i].set(j);
                radj[j].set(i);
            }

    Bits all(rwords);
    for (int i = 0; i < r; ++i) all.set(i);
    const int size = max_clique_size(radj, all, r + 1);

    // Lexicographically smallest witness: grow greedily in index order,
    // keeping a vertex whenever a maximum clique through it still exists.
    std::vector<int> witness;
    Bits cand = all;
    for (int v = 0; v < r && static_cast<int>(witness.size()) < size; ++v) {
        if (!cand.test(v)) continue;
        const Bits next = cand.and_with(radj[v]);
        const int need = size - static_cast<int>(witness.size()) - 1;
        if (max_clique_size(radj, next, need) >= need) {
            witness.push_back(reps[v]);
            cand = next;
        }
    }
    return {size, witness};
}

SdcReport sdc_report(const Ket& resource, const std::vector<int>& sender) {
    SdcReport rep;
    rep.sender_qubits = sender;
    std::sort(rep.sender_qubits.begin(), rep.sender_qubits.end());

    auto enc = enumerate_encodings(resource, rep.sender_qubits);
    rep.pauli_strings.reserve(enc.size());
    rep.encodings.reserve(enc.size());
    for (auto& [ps, ket] : enc) {
        rep.pauli_strings.push_back(std::move(ps));
        rep.encodings.push_back(std::move(ket));
    }

    auto [size, witness] = max_orthogonal_set(rep.encodings);
    rep.k_orthogonal = size;
    rep.witness_indices = std::move(witness);
    for (int idx : rep.witness_indices) rep.orthogonal_set.push_back(rep.pauli_strings[idx]);
    rep.capacity_cbits = std::log2(static_cast<double>(size));
    rep.sender_entropy_bits = entropy_of(resource, rep.sender_qubits);
    return rep;
}

int simulate_sdc_roundtrip(const SdcReport& report, int message) {
    if (message < 0 || message >= report.k_orthogonal)
        throw std::invalid_argument("message index out of range");
    const Ket& sent = report.encodings[report.witness_indices[message]];
    int best = -1;
    double best_p = -1.0;
    for (int j = 0; j < report.k_orthogonal; ++j) {
        const double p = std::norm(inner(report.encodings[report.witness_indices[j]], sent));
        if (p > best_p) {
            best_p = p;
            best = j;
        }
    }
    return best;
}

int simulate_sdc_roundtrip(const Ket& resource, const std::vector<int>& sender, int message) {
    return simulate_sdc_roundtrip(sdc_report(resource, sender), message);
}

}  // namespace qcomm
