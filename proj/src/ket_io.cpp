#include "qcomm/ket_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qcomm {

namespace {

enum class Tok { Plus, Minus, Star, Slash, LParen, RParen, Ket, Number, Imag, Sqrt, End };

struct Token {
    Tok kind;
    size_t pos;       // 1-based offset of first character
    double number;    // for Number
    std::string bits; // for Ket

    Token(Tok k, size_t p, double num = 0.0, std::string b = {})
        : kind(k), pos(p), number(num), bits(std::move(b)) {}
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            const size_t pos = i_ + 1;
            if (i_ >= text_.size()) {
                out.push_back({Tok::End, pos});
                return out;
            }
            const char c = text_[i_];
            switch (c) {
                case '+': ++i_; out.push_back({Tok::Plus, pos}); continue;
                case '-': ++i_; out.push_back({Tok::Minus, pos}); continue;
                case '*': ++i_; out.push_back({Tok::Star, pos}); continue;
                case '/': ++i_; out.push_back({Tok::Slash, pos}); continue;
                case '(': ++i_; out.push_back({Tok::LParen, pos}); continue;
                case ')': ++i_; out.push_back({Tok::RParen, pos}); continue;
                case '|': out.push_back(lex_ket(pos)); continue;
                default: break;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                out.push_back(lex_number(pos));
                continue;
            }
            if (c == 'i' && !word_follows(i_ + 1)) {
                ++i_;
                out.push_back({Tok::Imag, pos});
                continue;
            }
            if (text_.substr(i_, 4) == "sqrt") {
                i_ += 4;
                out.push_back({Tok::Sqrt, pos});
                continue;
            }
            throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                                 std::to_string(pos),
                             pos);
        }
    }

private:
    void skip_ws() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    }

    bool word_follows(size_t j) const {
        return j < text_.size() && std::isalnum(static_cast<unsigned char>(text_[j]));
    }

    Token lex_ket(size_t pos) {
        ++i_;  // '|'
        std::string bits;
        while (i_ < text_.size() && (text_[i_] == '0' || text_[i_] == '1')) bits += text_[i_++];
        if (bits.empty())
            throw ParseError("expected qubit bits after '|' at position " + std::to_string(pos),
                             pos);
        if (i_ >= text_.size() || text_[i_] != '>')
            throw ParseError("expected '>' to close ket at position " + std::to_string(i_ + 1),
                             i_ + 1);
        ++i_;
        Token t{Tok::Ket, pos};
        t.bits = std::move(bits);
        return t;
    }

    Token lex_number(size_t pos) {
        const size_t start = i_;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        if (i_ < text_.size() && text_[i_] == '.') {
            ++i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        }
        if (i_ < text_.size() && (text_[i_] == 'e' || text_[i_] == 'E')) {
            size_t j = i_ + 1;
            if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
            if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
                i_ = j;
                while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                    ++i_;
            }
        }
        const std::string s(text_.substr(start, i_ - start));
        if (s == ".")
            throw ParseError("malformed number at position " + std::to_string(pos), pos);
        Token t{Tok::Number, pos};
        t.number = std::stod(s);
        return t;
    }

    std::string_view text_;
    size_t i_ = 0;
};

// Expression values are complex scalars or amplitude vectors over n qubits.
struct Value {
    std::optional<Complex> scalar;
    int n_qubits = 0;
    std::vector<Complex> vec;

    bool is_scalar() const { return scalar.has_value(); }
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Value run() {
        Value v = additive();
        expect(Tok::End, "unexpected trailing input");
        return v;
    }

private:
    const Token& peek() const { return toks_[k_]; }
    Token take() { return toks_[k_++]; }

    void expect(Tok kind, const char* msg) {
        if (peek().kind != kind)
            throw ParseError(std::string(msg) + " at position " + std::to_string(peek().pos),
                             peek().pos);
        ++k_;
    }

    static bool starts_primary(Tok k) {
        return k == Tok::Ket || k == Tok::LParen || k == Tok::Number || k == Tok::Imag ||
               k == Tok::Sqrt;
    }

    Value additive() {
        Value acc = multiplicative();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token op = take();
            Value rhs = multiplicative();
            acc = add(acc, rhs, op.kind == Tok::Minus, op.pos);
        }
        return acc;
    }

    // '*' and '/' plus implicit multiplication by juxtaposition ("0.5|01>").
    Value multiplicative() {
        Value acc = unary();
        while (true) {
            if (peek().kind == Tok::Star) {
                const size_t pos = take().pos;
                acc = mul(acc, unary(), pos);
            } else if (peek().kind == Tok::Slash) {
                const size_t pos = take().pos;
                acc = div(acc, unary(), pos);
            } else if (starts_primary(peek().kind)) {
                const size_t pos = peek().pos;
                acc = mul(acc, unary(), pos);
            } else {
                break;
            }
        }
        return acc;
    }

    Value unary() {
        if (peek().kind == Tok::Minus) {
            const size_t pos = take().pos;
            Value v = unary();
            return mul(scalar_value(-1.0), v, pos);
        }
        return primary();
    }

    Value primary() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::Ket: {
                take();
                Value v;
                v.n_qubits = static_cast<int>(t.bits.size());
                v.vec.assign(size_t{1} << v.n_qubits, Complex{});
                uint64_t idx = 0;
                for (char b : t.bits) idx = (idx << 1) | (b == '1' ? 1u : 0u);
                v.vec[idx] = 1.0;
                return v;
            }
            case Tok::LParen: {
                take();
                Value v = additive();
                expect(Tok::RParen, "expected ')'");
                return v;
            }
            case Tok::Number:
                take();
                return scalar_value(t.number);
            case Tok::Imag:
                take();
                return scalar_value(Complex{0.0, 1.0});
            case Tok::Sqrt: {
                take();
                expect(Tok::LParen, "expected '(' after sqrt");
                Value arg = additive();
                expect(Tok::RParen, "expected ')'");
                if (!arg.is_scalar())
                    throw ParseError("sqrt of a ket at position " + std::to_string(t.pos), t.pos);
                const Complex s = *arg.scalar;
                if (std::abs(s.imag()) > 1e-12 || s.real() < 0.0)
                    throw ParseError("sqrt argument must be a non-negative real at position " +
                                         std::to_string(t.pos),
                                     t.pos);
                return scalar_value(std::sqrt(s.real()));
            }
            default:
                throw ParseError("expected a ket, number, or '(' at position " +
                                     std::to_string(t.pos),
                                 t.pos);
        }
    }

    static Value scalar_value(Complex c) {
        Value v;
        v.scalar = c;
        return v;
    }

    static Value add(const Value& a, const Value& b, bool subtract, size_t pos) {
        const Complex sign = subtract ? -1.0 : 1.0;
        if (a.is_scalar() && b.is_scalar()) return scalar_value(*a.scalar + sign * *b.scalar);
        if (a.is_scalar() != b.is_scalar())
            throw ParseError("cannot add a scalar and a ket at position " + std::to_string(pos),
                             pos);
        if (a.n_qubits != b.n_qubits)
            throw ParseError("inconsistent qubit counts across terms at position " +
                                 std::to_string(pos),
                             pos);
        Value out = a;
        for (size_t i = 0; i < out.vec.size(); ++i) out.vec[i] += sign * b.vec[i];
        return out;
    }

    static Value mul(const Value& a, const Value& b, size_t pos) {
        if (!a.is_scalar() && !b.is_scalar())
            throw ParseError("cannot multiply two kets at position " + std::to_string(pos), pos);
        if (a.is_scalar() && b.is_scalar()) return scalar_value(*a.scalar * *b.scalar);
        const Complex s = a.is_scalar() ? *a.scalar : *b.scalar;
        Value out = a.is_scalar() ? b : a;
        for (auto& c : out.vec) c *= s;
        return out;
    }

    static Value div(const Value& a, const Value& b, size_t pos) {
        if (!b.is_scalar())
            throw ParseError("cannot divide by a ket at position " + std::to_string(pos), pos);
        if (std::abs(*b.scalar) < 1e-300)
            throw ParseError("division by zero at position " + std::to_string(pos), pos);
        Value out = a;
        if (out.is_scalar()) {
            out.scalar = *out.scalar / *b.scalar;
        } else {
            for (auto& c : out.vec) c /= *b.scalar;
        }
        return out;
    }

    std::vector<Token> toks_;
    size_t k_ = 0;
};

std::string format_coefficient(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10f", x);
    return buf;
}

}  // namespace

ParsedKet parse_ket_full(std::string_view text) {
    Value v = Parser(Lexer(text).run()).run();
    if (v.is_scalar()) throw ParseError("expression contains no ket term", 1);
    Ket k = make_ket(v.n_qubits, std::move(v.vec));
    const double n = norm(k);
    if (n <= 1e-12) throw ParseError("expression evaluates to the zero vector", 1);
    for (auto& c : k.amplitudes) c /= n;
    return ParsedKet{std::move(k), n};
}

Ket parse_ket(std::string_view text) { return parse_ket_full(text).ket; }

std::string format_ket(const Ket& state, double threshold) {
    std::string out;
    for (uint64_t idx = 0; idx < state.dim(); ++idx) {
        const Complex a = state.amplitudes[idx];
        if (std::abs(a) <= threshold) continue;

        std::string bits(state.n_qubits, '0');
        for (int q = 1; q <= state.n_qubits; ++q)
            if (qubit_bit(idx, q, state.n_qubits)) bits[q - 1] = '1';

        bool negative = false;
        std::string coeff;
        if (std::abs(a.imag()) <= 1e-12) {
            negative = a.real() < 0.0;
            const double mag = std::abs(a.real());
            coeff = std::abs(mag - 1.0) <= 1e-12 ? "" : format_coefficient(mag);
        } else if (std::abs(a.real()) <= 1e-12) {
            negative = a.imag() < 0.0;
            coeff = format_coefficient(std::abs(a.imag())) + "i";
        } else {
            coeff = "(" + format_coefficient(a.real()) +
                    (a.imag() < 0.0 ? " - " : " + ") + format_coefficient(std::abs(a.imag())) +
                    "i)";
        }

        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff + "|" + bits + ">";
    }
    if (out.empty()) out = "0";
    return out;
}

Ket ket_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
    }
    if (!j.is_object() || !j.contains("n_qubits") || !j.contains("amplitudes"))
        throw ParseError("JSON state needs \"n_qubits\" and \"amplitudes\"", 1);
    const int n = j.at("n_qubits").get<int>();
    if (n < 1 || n > 16) throw ParseError("n_qubits out of supported range 1..16", 1);
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != (size_t{1} << n))
        throw ParseError("amplitudes must hold exactly 2^n_qubits pairs", 1);
    std::vector<Complex> a;
    a.reserve(amps.size());
    for (const auto& pair : amps) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("each amplitude must be a [re, im] pair", 1);
        a.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return make_ket(n, std::move(a));
}

std::string ket_to_json_text(const Ket& state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto& c : state.amplitudes)
        amps.push_back(nlohmann::json::array({c.real(), c.imag()}));
    nlohmann::json j;
    j["n_qubits"] = state.n_qubits;
    j["amplitudes"] = std::move(amps);
    return j.dump();
}

}  // namespace qcomm
