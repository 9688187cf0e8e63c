#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qcomm/ket.hpp"

namespace qcomm {

/// Raised on malformed ket expressions; position is a 1-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what), position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

struct ParsedKet {
    Ket ket;            // normalized
    double input_norm;  // norm of the expression before normalization
};

// Ket-expression grammar, e.g. "(|0000> + |1111>)/sqrt(2)" or "0.5i|01>".
// Coefficients: decimal floats, fractions p/q, sqrt(k), 1/sqrt(k), unary
// minus, and i for the imaginary unit. Whitespace is insignificant; a global
// division distributes over the sum.
ParsedKet parse_ket_full(std::string_view text);
Ket parse_ket(std::string_view text);

/// Terms with |amplitude| > threshold, sorted by basis index. Coefficients
/// print with 10 decimals so parse(format(k)) recovers k within 1e-9.
std::string format_ket(const Ket& state, double threshold);

// JSON interchange: {"n_qubits": N, "amplitudes": [[re, im], ...]} with 2^N
// pairs, qubit 1 = most significant index bit. Bit-exact across read/write.
Ket ket_from_json_text(const std::string& text);
std::string ket_to_json_text(const Ket& state);

}  // namespace qcomm
