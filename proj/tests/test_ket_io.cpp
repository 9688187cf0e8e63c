#include "doctest.h"

#include <random>

#include "qcomm/ket_io.hpp"
#include "test_util.hpp"

using namespace qcomm;

TEST_CASE("parse_ket on the named states") {
    const double r2 = 1.0 / std::sqrt(2.0);

    const Ket ghz = parse_ket("(|0000> + |1111>)/sqrt(2)");
    REQUIRE(ghz.n_qubits == 4);
    CHECK(std::abs(ghz.amplitudes[0] - Complex{r2, 0.0}) < 1e-12);
    CHECK(std::abs(ghz.amplitudes[15] - Complex{r2, 0.0}) < 1e-12);
    for (int i = 1; i < 15; ++i) CHECK(std::abs(ghz.amplitudes[i]) < 1e-15);

    const Ket k01 = parse_ket("|01>");
    CHECK(k01.n_qubits == 2);
    CHECK(std::abs(k01.amplitudes[1] - Complex{1.0, 0.0}) < 1e-15);

    const Ket s1 = parse_ket("(|0000>+|0101>+|1000>+|1110>)/2");
    for (uint64_t idx : {0, 5, 8, 14})
        CHECK(std::abs(s1.amplitudes[idx] - Complex{0.5, 0.0}) < 1e-12);
}

TEST_CASE("qubit 1 is the most significant index bit") {
    const Ket k = parse_ket("|10>");
    CHECK(std::abs(k.amplitudes[2] - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("coefficient grammar") {
    const Ket a = parse_ket("0.5i|0> + (1/sqrt(2))i|1> - 0.5|0>");
    // amplitudes before normalization: (-0.5 + 0.5i, 0.7071i)
    const double norm_in = std::sqrt(0.25 + 0.25 + 0.5);
    CHECK(std::abs(a.amplitudes[0] - Complex{-0.5, 0.5} / norm_in) < 1e-12);
    CHECK(std::abs(a.amplitudes[1] - Complex{0.0, 1.0 / std::sqrt(2.0)} / norm_in) < 1e-12);

    const Ket b = parse_ket(" 3/4 * |11> + sqrt(2)|00> ");
    CHECK(std::abs(b.amplitudes[3] / b.amplitudes[0] - Complex{0.75 / std::sqrt(2.0), 0.0}) <
          1e-12);

    const ParsedKet c = parse_ket_full("|0> + |1>");
    CHECK(c.input_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(norm(c.ket) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_ket("|01"), ParseError);
    CHECK_THROWS_AS(parse_ket("|0> + |10>"), ParseError);       // inconsistent counts
    CHECK_THROWS_AS(parse_ket("|01> - |01>"), ParseError);      // zero vector
    CHECK_THROWS_AS(parse_ket("0.5"), ParseError);              // no ket term
    CHECK_THROWS_AS(parse_ket("|01> / |01>"), ParseError);      // divide by ket
    CHECK_THROWS_AS(parse_ket("sqrt(-1)|0>"), ParseError);
    CHECK_THROWS_AS(parse_ket(""), ParseError);
    try {
        parse_ket("|00> + |0x>");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 10);  // points at the 'x'
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("format_ket matches the expected shapes") {
    const Ket ghz = parse_ket("(|0000>+|1111>)/sqrt(2)");
    CHECK(format_ket(ghz, 1e-9) == "0.7071067812|0000> + 0.7071067812|1111>");

    CHECK(format_ket(basis_ket(4, 6), 1e-9) == "|0110>");

    const Ket w = parse_ket("(|0001>+|0010>+|0100>+|1000>)/2");
    CHECK(format_ket(w, 1e-9) ==
          "0.5000000000|0001> + 0.5000000000|0010> + 0.5000000000|0100> + 0.5000000000|1000>");

    const Ket omega = parse_ket("(|0000>+|0110>+|1001>-|1111>)/2");
    CHECK(format_ket(omega, 1e-9) ==
          "0.5000000000|0000> + 0.5000000000|0110> + 0.5000000000|1001> - 0.5000000000|1111>");
}

TEST_CASE("parse(format) round-trips random states within 1e-9") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Ket k = testutil::random_state(n, rng);
        const Ket back = parse_ket(format_ket(k, 0.0));
        REQUIRE(back.n_qubits == n);
        // The formatter preserves global phase, so compare directly.
        for (size_t i = 0; i < k.dim(); ++i)
            CHECK(std::abs(back.amplitudes[i] - k.amplitudes[i]) < 1e-9);
    }
}

TEST_CASE("JSON state format round-trips bit-exactly") {
    std::mt19937_64 rng(29);
    const Ket k = testutil::random_state(3, rng);
    const Ket back = ket_from_json_text(ket_to_json_text(k));
    REQUIRE(back.n_qubits == 3);
    for (size_t i = 0; i < k.dim(); ++i) {
        CHECK(back.amplitudes[i].real() == k.amplitudes[i].real());
        CHECK(back.amplitudes[i].imag() == k.amplitudes[i].imag());
    }

    CHECK_THROWS_AS(ket_from_json_text("{\"n_qubits\": 2}"), ParseError);
    CHECK_THROWS_AS(ket_from_json_text("{\"n_qubits\": 2, \"amplitudes\": [[1,0]]}"), ParseError);
    CHECK_THROWS_AS(ket_from_json_text("not json"), ParseError);
}
