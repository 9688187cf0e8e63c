#include "qcomm/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcomm {

namespace {

void check_labels(int n, const std::vector<int>& labels) {
    std::vector<bool> seen(n + 1, false);
    for (int lab : labels) {
        if (lab < 1 || lab > n) throw std::invalid_argument("qubit label out of range");
        if (seen[lab]) throw std::invalid_argument("duplicate qubit label");
        seen[lab] = true;
    }
}

// Index with the bits of `sub` scattered into the positions of `labels`
// (ascending order) of an n-qubit register.
uint64_t scatter_bits(uint64_t sub, const std::vector<int>& labels, int n) {
    uint64_t out = 0;
    const int k = static_cast<int>(labels.size());
    for (int j = 0; j < k; ++j) {
        const uint64_t bit = (sub >> (k - 1 - j)) & 1u;
        out |= bit << (n - labels[j]);
    }
    return out;
}

double entropy_from_spectrum(const std::vector<double>& lambdas) {
    double s = 0.0;
    for (double l : lambdas)
        if (l > 0.0) s -= l * std::log2(l);
    return s;
}

// Deterministic lexicographic order on complex vectors, amplitudes rounded
// at 1e-9; larger vector first so |0> precedes |1> in degenerate spectra.
bool lex_greater(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    auto r = [](double x) { return std::round(x * 1e9); };
    for (size_t i = 0; i < a.size(); ++i) {
        const double re_a = r(a[i].real()), re_b = r(b[i].real());
        if (re_a != re_b) return re_a > re_b;
        const double im_a = r(a[i].imag()), im_b = r(b[i].imag());
        if (im_a != im_b) return im_a > im_b;
    }
    return false;
}

}  // namespace

Bipartition Bipartition::from_side_a(int n_qubits, std::vector<int> side_a) {
    check_labels(n_qubits, side_a);
    std::sort(side_a.begin(), side_a.end());
    if (side_a.empty() || static_cast<int>(side_a.size()) == n_qubits)
        throw std::invalid_argument("bipartition sides must both be non-empty");
    Bipartition p;
    p.n_qubits = n_qubits;
    p.side_a = std::move(side_a);
    for (int q = 1; q <= n_qubits; ++q)
        if (!std::binary_search(p.side_a.begin(), p.side_a.end(), q)) p.side_b.push_back(q);
    return p;
}

HermitianMatrix partial_trace(const Ket& state, const std::vector<int>& keep_in) {
    const int n = state.n_qubits;
    std::vector<int> keep = keep_in;
    check_labels(n, keep);
    std::sort(keep.begin(), keep.end());
    if (keep.empty() || static_cast<int>(keep.size()) == n)
        throw std::invalid_argument("partial_trace: keep must be a non-empty strict subset");

    std::vector<int> env;
    for (int q = 1; q <= n; ++q)
        if (!std::binary_search(keep.begin(), keep.end(), q)) env.push_back(q);

    const uint64_t kd = uint64_t{1} << keep.size();
    const uint64_t ed = uint64_t{1} << env.size();
    std::vector<uint64_t> keep_off(kd), env_off(ed);
    for (uint64_t i = 0; i < kd; ++i) keep_off[i] = scatter_bits(i, keep, n);
    for (uint64_t j = 0; j < ed; ++j) env_off[j] = scatter_bits(j, env, n);

    ComplexMatrix rho(static_cast<int>(kd), static_cast<int>(kd));
    for (uint64_t i = 0; i < kd; ++i)
        for (uint64_t ip = i; ip < kd; ++ip) {
            Complex acc{};
            for (uint64_t j = 0; j < ed; ++j)
                acc += state.amplitudes[keep_off[i] + env_off[j]] *
                       std::conj(state.amplitudes[keep_off[ip] + env_off[j]]);
            rho.at(static_cast<int>(i), static_cast<int>(ip)) = acc;
            if (i != ip) rho.at(static_cast<int>(ip), static_cast<int>(i)) = std::conj(acc);
        }
    return HermitianMatrix::from(std::move(rho));
}

double von_neumann_entropy(const HermitianMatrix& rho) {
    if (std::abs(rho.trace_real() - 1.0) > 1e-8)
        throw std::invalid_argument("von_neumann_entropy: trace differs from 1");
    const std::vector<double> lambdas = hermitian_eigenvalues(rho);
    for (double l : lambdas)
        if (l < -1e-8)
            throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
    return entropy_from_spectrum(lambdas);
}

double entropy_of(const Ket& state, const std::vector<int>& labels) {
    return von_neumann_entropy(partial_trace(state, labels));
}

EntropyTable entropy_table(const Ket& state) {
    const int n = state.n_qubits;
    if (n < 2 || n > 8)
        throw std::invalid_argument("entropy_table: supported range is 2..8 qubits");

    EntropyTable table;
    table.n_qubits = n;
    // Every subset containing qubit 1, except the full set: one canonical
    // representative per bipartition class.
    for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
        if (mask + 1 == (uint64_t{1} << (n - 1))) continue;  // full set
        EntropyRow row;
        row.side_a.push_back(1);
        for (int q = 2; q <= n; ++q)
            if (mask & (uint64_t{1} << (q - 2))) row.side_a.push_back(q);
        for (int q = 2; q <= n; ++q)
            if (!(mask & (uint64_t{1} << (q - 2)))) row.side_b.push_back(q);
        // The smaller side diagonalizes faster; both have the same entropy.
        const std::vector<int>& smaller =
            row.side_a.size() <= row.side_b.size() ? row.side_a : row.side_b;
        row.entropy_bits = entropy_of(state, smaller);
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(), [](const EntropyRow& a, const EntropyRow& b) {
        if (a.side_a.size() != b.side_a.size()) return a.side_a.size() < b.side_a.size();
        return a.side_a < b.side_a;
    });
    return table;
}

std::vector<Complex> regroup(const Ket& state, const Bipartition& partition) {
    std::vector<int> order = partition.side_a;
    order.insert(order.end(), partition.side_b.begin(), partition.side_b.end());
    return permute_qubits(state, order).amplitudes;
}

SchmidtForm schmidt_decompose(const Ket& state, const Bipartition& partition) {
    if (partition.n_qubits != state.n_qubits)
        throw std::invalid_argument("schmidt_decompose: partition size mismatch");
    const int na = static_cast<int>(partition.side_a.size());
    const int nb = static_cast<int>(partition.side_b.size());
    const int da = 1 << na, db = 1 << nb;
    const std::vector<Complex> m = regroup(state, partition);  // da x db row-major

    const bool a_smaller = da <= db;
    const int ds = a_smaller ? da : db;

    // Reduced density matrix of the smaller side.
    ComplexMatrix rho(ds, ds);
    for (int i = 0; i < ds; ++i)
        for (int j = 0; j < ds; ++j) {
            Complex acc{};
            if (a_smaller) {
                for (int e = 0; e < db; ++e)
                    acc += m[static_cast<size_t>(i) * db + e] *
                           std::conj(m[static_cast<size_t>(j) * db + e]);
            } else {
                for (int e = 0; e < da; ++e)
                    acc += m[static_cast<size_t>(e) * db + i] *
                           std::conj(m[static_cast<size_t>(e) * db + j]);
            }
            rho.at(i, j) = acc;
        }
    const EigenSystem eig = hermitian_eigen(HermitianMatrix::from(std::move(rho)));

    struct Pair {
        double c;
        std::vector<Complex> left, right;
    };
    std::vector<Pair> pairs;
    for (int k = 0; k < ds; ++k) {
        if (eig.values[k] <= 1e-18) continue;
        const double c = std::sqrt(eig.values[k]);
        std::vector<Complex> u(a_smaller ? da : db);
        for (int i = 0; i < static_cast<int>(u.size()); ++i) u[i] = eig.vectors.at(i, k);

        // The partner vector comes from projecting the state onto u.
        std::vector<Complex> w(a_smaller ? db : da);
        if (a_smaller) {
            for (int j = 0; j < db; ++j) {
                Complex acc{};
                for (int i = 0; i < da; ++i)
                    acc += std::conj(u[i]) * m[static_cast<size_t>(i) * db + j];
                w[j] = acc / c;
            }
        } else {
            for (int i = 0; i < da; ++i) {
                Complex acc{};
                for (int j = 0; j < db; ++j)
                    acc += m[static_cast<size_t>(i) * db + j] * std::conj(u[j]);
                w[i] = acc / c;
            }
        }
        Pair p;
        p.c = c;
        p.left = a_smaller ? std::move(u) : std::move(w);
        p.right = a_smaller ? std::move(w) : std::move(u);
        pairs.push_back(std::move(p));
    }

    // Re-phase so the left vector's first significant entry is real positive,
    // then order descending by coefficient with a lexicographic tie-break.
    for (auto& p : pairs) {
        for (const auto& e : p.left) {
            if (std::abs(e) > 1e-9) {
                const Complex ph = std::conj(e) / std::abs(e);
                for (auto& x : p.left) x *= ph;
                for (auto& x : p.right) x *= std::conj(ph);
                break;
            }
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        if (std::abs(x.c - y.c) > 1e-9) return x.c > y.c;
        return lex_greater(x.left, y.left);
    });

    SchmidtForm form;
    form.partition = partition;
    for (auto& p : pairs) {
        form.coefficients.push_back(p.c);
        form.left_basis.push_back(make_ket(na, std::move(p.left)));
        form.right_basis.push_back(make_ket(nb, std::move(p.right)));
    }
    return form;
}

Ket schmidt_reconstruct(const SchmidtForm& form) {
    const int n = form.partition.n_qubits;
    std::vector<int> grouped = form.partition.side_a;
    grouped.insert(grouped.end(), form.partition.side_b.begin(), form.partition.side_b.end());
    // Position of each label in the grouped ordering inverts the regroup.
    std::vector<int> inverse(n);
    for (int pos = 0; pos < n; ++pos) inverse[grouped[pos] - 1] = pos + 1;
    std::vector<int> back(n);
    for (int q = 1; q <= n; ++q) back[q - 1] = inverse[q - 1];

    std::vector<Complex> acc(size_t{1} << n);
    for (size_t l = 0; l < form.coefficients.size(); ++l) {
        const Ket t = tensor(form.left_basis[l], form.right_basis[l]);
        for (size_t i = 0; i < acc.size(); ++i)
            acc[i] += form.coefficients[l] * t.amplitudes[i];
    }
    return permute_qubits(make_ket(n, std::move(acc)), back);
}

}  // namespace qcomm
