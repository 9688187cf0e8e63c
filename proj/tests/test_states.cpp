#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "qcomm/ket_io.hpp"
#include "qcomm/states.hpp"

using namespace qcomm;

namespace {

bool invariant_under_all_permutations(const Ket& k) {
    std::vector<int> perm = {1, 2, 3, 4};
    do {
        const Ket p = permute_qubits(k, perm);
        for (size_t i = 0; i < k.dim(); ++i)
            if (std::abs(p.amplitudes[i] - k.amplitudes[i]) > 1e-12) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace

TEST_CASE("catalog states match their defining expressions") {
    const Ket omega = catalog_state("OMEGA");
    const Ket omega_expr = parse_ket("(|0000>+|0110>+|1001>-|1111>)/2");
    for (size_t i = 0; i < omega.dim(); ++i)
        CHECK(std::abs(omega.amplitudes[i] - omega_expr.amplitudes[i]) < 1e-12);

    const Ket phi_plus = catalog_state("PHI+");
    const double r2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(phi_plus.amplitudes[0] - Complex{r2, 0.0}) < 1e-15);
    CHECK(std::abs(phi_plus.amplitudes[3] - Complex{r2, 0.0}) < 1e-15);

    const Ket ghz2 = catalog_state("GHZ(2)");
    for (size_t i = 0; i < 4; ++i)
        CHECK(std::abs(ghz2.amplitudes[i] - phi_plus.amplitudes[i]) < 1e-15);

    CHECK_THROWS_AS(catalog_state("GHZ(7)"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_state("NOPE"), std::invalid_argument);
}

TEST_CASE("catalog states are normalized to machine precision") {
    for (const auto& e : catalog_entries()) {
        CHECK(std::abs(norm(e.state) - 1.0) <= 1e-15);
        CHECK(e.state.dim() == (size_t{1} << e.state.n_qubits));
    }
}

TEST_CASE("only GHZ4 and W4 are permutation symmetric") {
    CHECK(invariant_under_all_permutations(catalog_state("GHZ4")));
    CHECK(invariant_under_all_permutations(catalog_state("W4")));
    CHECK_FALSE(invariant_under_all_permutations(catalog_state("OMEGA")));
    CHECK_FALSE(invariant_under_all_permutations(catalog_state("S1")));
    CHECK_FALSE(invariant_under_all_permutations(catalog_state("S2")));
}

TEST_CASE("permutation operator moves amplitudes by index bits") {
    // |10> with qubits swapped becomes |01>.
    const Ket k = permute_qubits(basis_ket(2, 2), {2, 1});
    CHECK(std::abs(k.amplitudes[1] - Complex{1.0, 0.0}) < 1e-15);
    CHECK_THROWS_AS(permute_qubits(basis_ket(2, 0), {1, 1}), std::invalid_argument);
}
