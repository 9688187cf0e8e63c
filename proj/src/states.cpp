#include "qcomm/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qcomm {

namespace {

Ket sparse_state(int n, const std::vector<std::pair<uint64_t, double>>& terms) {
    std::vector<Complex> a(size_t{1} << n);
    double norm_sq = 0.0;
    for (const auto& [idx, coeff] : terms) norm_sq += coeff * coeff;
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (const auto& [idx, coeff] : terms) a[idx] = coeff * scale;
    return make_ket(n, std::move(a));
}

Ket ghz_state(int n) {
    return sparse_state(n, {{0, 1.0}, {(uint64_t{1} << n) - 1, 1.0}});
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    cat.push_back({"GHZ4", ghz_state(4), "four-qubit Greenberger-Horne-Zeilinger state"});
    // |0001>+|0010>+|0100>+|1000>
    cat.push_back({"W4", sparse_state(4, {{1, 1.0}, {2, 1.0}, {4, 1.0}, {8, 1.0}}),
                   "four-qubit W state"});
    // |0000>+|0110>+|1001>-|1111>
    cat.push_back({"OMEGA", sparse_state(4, {{0, 1.0}, {6, 1.0}, {9, 1.0}, {15, -1.0}}),
                   "four-qubit cluster state (Briegel-Raussendorf)"});
    // |0000>+|0101>+|1000>+|1110>
    cat.push_back({"S1", sparse_state(4, {{0, 1.0}, {5, 1.0}, {8, 1.0}, {14, 1.0}}),
                   "four-term four-qubit state, asymmetric under qubit permutations"});
    // |0000>+|1011>+|1101>+|1110>
    cat.push_back({"S2", sparse_state(4, {{0, 1.0}, {11, 1.0}, {13, 1.0}, {14, 1.0}}),
                   "four-term four-qubit state, asymmetric under qubit permutations"});
    cat.push_back({"PHI+", sparse_state(2, {{0, 1.0}, {3, 1.0}}), "Bell state (|00>+|11>)/sqrt(2)"});
    cat.push_back({"PHI-", sparse_state(2, {{0, 1.0}, {3, -1.0}}), "Bell state (|00>-|11>)/sqrt(2)"});
    cat.push_back({"PSI+", sparse_state(2, {{1, 1.0}, {2, 1.0}}), "Bell state (|01>+|10>)/sqrt(2)"});
    cat.push_back({"PSI-", sparse_state(2, {{1, 1.0}, {2, -1.0}}), "Bell state (|01>-|10>)/sqrt(2)"});
    for (int n = 2; n <= 6; ++n)
        cat.push_back({"GHZ(" + std::to_string(n) + ")", ghz_state(n),
                       std::to_string(n) + "-qubit GHZ state"});
    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

Ket catalog_state(const std::string& name) {
    std::string key;
    for (char c : name) key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& e : catalog_entries())
        if (e.name == key) return e.state;
    throw std::invalid_argument("unknown state name: " + name);
}

}  // namespace qcomm
