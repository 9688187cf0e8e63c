#include "qcomm/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qcomm {

namespace {

std::vector<int> complement_labels(int n, const std::vector<int>& subset) {
    std::vector<int> out;
    for (int q = 1; q <= n; ++q)
        if (!std::binary_search(subset.begin(), subset.end(), q)) out.push_back(q);
    return out;
}

Complex omega_power(int m, long long e) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(((e % m) + m) % m) / m;
    return Complex{std::cos(ang), std::sin(ang)};
}

}  // namespace

TeleportTask TeleportTask::make(Ket resource, std::vector<int> bob_qubits, int m,
                                std::vector<Ket> target_basis) {
    const int N = resource.n_qubits;
    std::sort(bob_qubits.begin(), bob_qubits.end());
    if (bob_qubits.empty() || static_cast<int>(bob_qubits.size()) >= N)
        throw std::invalid_argument("bob_qubits must be a non-empty strict subset");
    for (size_t i = 0; i < bob_qubits.size(); ++i) {
        if (bob_qubits[i] < 1 || bob_qubits[i] > N)
            throw std::invalid_argument("bob qubit label out of range");
        if (i > 0 && bob_qubits[i] == bob_qubits[i - 1])
            throw std::invalid_argument("duplicate bob qubit label");
    }
    const int n = static_cast<int>(bob_qubits.size());
    if (m < 1 || m > (1 << n))
        throw std::invalid_argument("m must satisfy 1 <= m <= 2^n");

    if (target_basis.empty())
        for (int k = 0; k < m; ++k) target_basis.push_back(basis_ket(n, k));
    if (static_cast<int>(target_basis.size()) != m)
        throw std::invalid_argument("target basis must hold exactly m states");
    for (const auto& v : target_basis)
        if (v.n_qubits != n)
            throw std::invalid_argument("target basis states must live on n qubits");
    for (size_t i = 0; i < target_basis.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(std::abs(inner(target_basis[i], target_basis[j])) - want) > EPS_ORTHO)
                throw std::invalid_argument("target basis is not orthonormal");
        }

    TeleportTask t;
    t.resource = std::move(resource);
    t.bob_qubits = std::move(bob_qubits);
    t.m = m;
    t.target_basis = std::move(target_basis);
    return t;
}

FeasibilityVerdict check_feasibility(const TeleportTask& task) {
    const int N = task.resource.n_qubits;
    const auto alice = complement_labels(N, task.bob_qubits);
    const SchmidtForm form =
        schmidt_decompose(task.resource, Bipartition::from_side_a(N, alice));

    FeasibilityVerdict v;
    v.schmidt_spectrum = form.coefficients;
    double entropy = 0.0;
    for (double c : form.coefficients) {
        const double p = c * c;
        if (p > 0.0) entropy -= p * std::log2(p);
    }
    v.bob_entropy_bits = entropy;
    v.entropy_ok = std::abs(entropy - std::log2(static_cast<double>(task.m))) <= 1e-6;

    const double uniform = 1.0 / std::sqrt(static_cast<double>(task.m));
    v.structural_ok = form.rank() == task.m &&
                      std::all_of(form.coefficients.begin(), form.coefficients.end(),
                                  [&](double c) { return std::abs(c - uniform) <= 1e-9; });
    v.feasible = v.structural_ok;
    return v;
}

std::vector<Ket> extend_to_full_basis(std::vector<Ket> partial, int n_qubits) {
    const size_t dim = size_t{1} << n_qubits;
    for (uint64_t e = 0; e < dim && partial.size() < dim; ++e) {
        Ket v = basis_ket(n_qubits, e);
        for (const auto& u : partial) {
            const Complex ov = inner(u, v);
            for (size_t i = 0; i < dim; ++i) v.amplitudes[i] -= ov * u.amplitudes[i];
        }
        const double nrm = norm(v);
        if (nrm > 1e-7) {
            for (auto& c : v.amplitudes) c /= nrm;
            partial.push_back(std::move(v));
        }
    }
    if (partial.size() != dim)
        throw std::runtime_error("extend_to_full_basis: completion failed");
    return partial;
}

MeasurementBasis build_measurement_basis(const TeleportTask& task, bool force) {
    const int N = task.resource.n_qubits;
    const int n = task.n();
    const int m = task.m;

    const FeasibilityVerdict verdict = check_feasibility(task);
    if (!verdict.feasible && !force)
        throw std::invalid_argument("task is infeasible: Schmidt spectrum across the Bob cut "
                                    "is not uniform with multiplicity m");

    const auto alice = complement_labels(N, task.bob_qubits);
    const SchmidtForm form =
        schmidt_decompose(task.resource, Bipartition::from_side_a(N, alice));
    if (form.rank() < m)
        throw std::invalid_argument("Schmidt rank below m; no basis to build");

    MeasurementBasis basis;
    basis.eta = task.target_basis;
    basis.chi.assign(form.left_basis.begin(), form.left_basis.begin() + m);
    basis.mu.assign(form.right_basis.begin(), form.right_basis.begin() + m);
    basis.active_count = m * m;

    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));

    // Active vectors |theta_{j,k}> in outcome order l = j*m + k.
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            Ket theta;
            theta.n_qubits = N;
            theta.amplitudes.assign(size_t{1} << N, Complex{});
            for (int l = 0; l < m; ++l) {
                const Ket prod = tensor(basis.eta[l], basis.chi[(l + k) % m]);
                const Complex w = omega_power(m, static_cast<long long>(j) * l) * inv_sqrt_m;
                for (size_t i = 0; i < theta.amplitudes.size(); ++i)
                    theta.amplitudes[i] += w * prod.amplitudes[i];
            }
            basis.vectors.push_back(std::move(theta));
        }

    // Completion: products of the extended local bases outside the m x m block.
    const std::vector<Ket> eta_full = extend_to_full_basis(basis.eta, n);
    const std::vector<Ket> chi_full = extend_to_full_basis(basis.chi, N - n);
    for (int a = 0; a < (1 << n); ++a)
        for (int b = 0; b < (1 << (N - n)); ++b) {
            if (a < m && b < m) continue;
            basis.vectors.push_back(tensor(eta_full[a], chi_full[b]));
        }

    // Corrections V_{j,k} = sum_l w^{jl} |mu_l><mu_{(l+k) mod m}|, identity
    // on the orthogonal complement of span{mu}.
    const std::vector<Ket> mu_full = extend_to_full_basis(basis.mu, n);
    const int dn = 1 << n;
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            ComplexMatrix v(dn, dn);
            for (int l = 0; l < m; ++l) {
                const Complex w = omega_power(m, static_cast<long long>(j) * l);
                const Ket& lhs = basis.mu[l];
                const Ket& rhs = basis.mu[(l + k) % m];
                for (int r = 0; r < dn; ++r)
                    for (int c = 0; c < dn; ++c)
                        v.at(r, c) += w * lhs.amplitudes[r] * std::conj(rhs.amplitudes[c]);
            }
            for (int l = m; l < dn; ++l)
                for (int r = 0; r < dn; ++r)
                    for (int c = 0; c < dn; ++c)
                        v.at(r, c) += mu_full[l].amplitudes[r] * std::conj(mu_full[l].amplitudes[c]);
            basis.corrections.push_back(std::move(v));
        }
    return basis;
}

bool verify_block_unitarity(const MeasurementBasis& basis, const TeleportTask& task) {
    const int m = task.m;
    for (int l = 0; l < basis.active_count; ++l) {
        // C^(l)[i][k] = sqrt(m) <theta_l | eta_i (x) chi_k>
        ComplexMatrix c(m, m);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k)
                c.at(i, k) = std::sqrt(static_cast<double>(m)) *
                             inner(basis.vectors[l], tensor(basis.eta[i], basis.chi[k]));
        const ComplexMatrix cc = multiply(c, adjoint(c));
        if (max_abs_diff(cc, ComplexMatrix::identity(m)) > 1e-9) return false;
    }
    return true;
}

std::vector<Complex> random_coefficients(int m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Complex> alpha(m);
    double norm_sq = 0.0;
    for (auto& a : alpha) {
        a = Complex{2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0};
        norm_sq += std::norm(a);
    }
    if (norm_sq == 0.0) alpha[0] = 1.0, norm_sq = 1.0;
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& a : alpha) a *= scale;
    return alpha;
}

TeleportOutcome simulate_with_basis(const TeleportTask& task, const MeasurementBasis& basis,
                                    const std::vector<Complex>& alpha) {
    const int N = task.resource.n_qubits;
    const int n = task.n();
    const int m = task.m;
    if (static_cast<int>(alpha.size()) != m)
        throw std::invalid_argument("alpha must hold exactly m coefficients");
    double a_norm = 0.0;
    for (const auto& a : alpha) a_norm += std::norm(a);
    if (std::abs(a_norm - 1.0) > EPS_NORM)
        throw std::invalid_argument("alpha is not normalized");

    // Unknown input on the target basis.
    Ket input;
    input.n_qubits = n;
    input.amplitudes.assign(size_t{1} << n, Complex{});
    for (int k = 0; k < m; ++k)
        for (size_t i = 0; i < input.amplitudes.size(); ++i)
            input.amplitudes[i] += alpha[k] * task.target_basis[k].amplitudes[i];

    // Combined register: input qubits 1..n, resource shifted to n+1..n+N.
    const Ket combined = tensor(input, task.resource);

    // Reorder to [input, alice, bob] and view as 2^N x 2^n.
    std::vector<int> order;
    for (int q = 1; q <= n; ++q) order.push_back(q);
    for (int q : complement_labels(N, task.bob_qubits)) order.push_back(n + q);
    for (int q : task.bob_qubits) order.push_back(n + q);
    const Ket grouped = permute_qubits(combined, order);

    const size_t meas_dim = size_t{1} << N;
    const size_t bob_dim = size_t{1} << n;

    // Expected state on Bob's Schmidt basis.
    std::vector<Complex> expected(bob_dim);
    for (int k = 0; k < m; ++k)
        for (size_t b = 0; b < bob_dim; ++b)
            expected[b] += alpha[k] * basis.mu[k].amplitudes[b];

    TeleportOutcome out;
    out.cbits_required = std::log2(static_cast<double>(basis.active_count));
    out.min_fidelity = 1.0;
    for (size_t l = 0; l < basis.vectors.size(); ++l) {
        const auto& theta = basis.vectors[l].amplitudes;
        std::vector<Complex> conditional(bob_dim);
        for (size_t a = 0; a < meas_dim; ++a) {
            const Complex ca = std::conj(theta[a]);
            if (ca == Complex{}) continue;
            for (size_t b = 0; b < bob_dim; ++b)
                conditional[b] += ca * grouped.amplitudes[a * bob_dim + b];
        }
        double p = 0.0;
        for (const auto& c : conditional) p += std::norm(c);
        out.outcome_probabilities.push_back(p);

        if (static_cast<int>(l) < basis.active_count) {
            double fid = 1.0;
            if (p > 1e-12) {
                const std::vector<Complex> corrected =
                    mat_apply(basis.corrections[l], conditional);
                Complex ov{};
                for (size_t b = 0; b < bob_dim; ++b)
                    ov += std::conj(expected[b]) * corrected[b];
                fid = std::norm(ov) / p;
            }
            out.per_outcome_fidelity.push_back(fid);
            out.min_fidelity = std::min(out.min_fidelity, fid);
        }
    }
    return out;
}

TeleportOutcome simulate_teleportation(const TeleportTask& task,
                                       const std::vector<Complex>& alpha) {
    return simulate_with_basis(task, build_measurement_basis(task), alpha);
}

TeleportOutcome simulate_teleportation(const TeleportTask& task, uint64_t seed) {
    return simulate_teleportation(task, random_coefficients(task.m, seed));
}

}  // namespace qcomm
