#pragma once

#include <string>
#include <vector>

#include "qcomm/ket.hpp"

namespace qcomm {

struct CatalogEntry {
    std::string name;
    Ket state;
    std::string source;  // short description of where the state comes from
};

// Built-in states: GHZ4, W4, OMEGA, S1, S2, the Bell states PHI+/PHI-/PSI+/PSI-
// and GHZ(n) for 2 <= n <= 6. Amplitudes are constructed from exact values.
/// Throws std::invalid_argument for unknown names.
Ket catalog_state(const std::string& name);

const std::vector<CatalogEntry>& catalog_entries();

}  // namespace qcomm
