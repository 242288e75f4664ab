#include <doctest.h>

#include <stdexcept>

#include "rmconv/rm_codes.hpp"

using namespace rmconv;

namespace {

// Column j (1-based) of the generator matrix spells j in binary.
BitMatrix generator_from_binary(int m) {
    const std::size_t n = (std::size_t{1} << m) - 1;
    BitMatrix g(static_cast<std::size_t>(m), n);
    for (std::size_t j = 1; j <= n; ++j)
        for (int r = 0; r < m; ++r) g.set(static_cast<std::size_t>(r), j - 1, (j >> r) & 1U);
    return g;
}

}  // namespace

TEST_CASE("generator matrix of the Steane code") {
    const auto g = generator_matrix(3);
    CHECK(g == BitMatrix::from_strings({"1010101", "0110011", "0001111"}));
}

TEST_CASE("generator matrix recursion") {
    for (int m = 3; m <= 7; ++m) CHECK(generator_matrix(m) == generator_from_binary(m));
    const auto g3 = generator_matrix(3), g4 = generator_matrix(4);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(g4.row(r).slice(0, 7) == g3.row(r));
        CHECK_FALSE(g4.row(r).test(7));
        CHECK(g4.row(r).slice(8, 7) == g3.row(r));
    }
    CHECK(g4.row(3).to_string() == "000000011111111");
    CHECK_THROWS_AS(generator_matrix(2), std::invalid_argument);
}

TEST_CASE("parity-check rows") {
    CHECK(h_tilde(3).rows() == 0);
    CHECK(h_tilde(3).cols() == 7);
    const auto h4 = h_tilde(4);
    REQUIRE(h4.rows() == 6);
    CHECK(h4.row(0) == BitVector::from_support(15, {1, 3, 9, 11}));
    CHECK(h4.row(1) == BitVector::from_support(15, {2, 3, 10, 11}));
    CHECK(h4.row(2) == BitVector::from_support(15, {3, 7, 11, 15}));
    CHECK(h4.row(3) == BitVector::from_support(15, {1, 3, 5, 7}));
    CHECK(h4.row(4) == BitVector::from_support(15, {2, 3, 6, 7}));
    CHECK(h4.row(5) == BitVector::from_support(15, {4, 5, 6, 7}));
    for (int m = 3; m <= 8; ++m) {
        CAPTURE(m);
        const auto h = h_tilde(m);
        const std::size_t n = (std::size_t{1} << m) - 1;
        CHECK(h.rows() == n + 1 - 2 * static_cast<std::size_t>(m) - 2);
        CHECK(h.cols() == n);
        CHECK(rank(generator_matrix(m).vstack(h)) == n - static_cast<std::size_t>(m) - 1);
    }
    CHECK(h_tilde(5).rows() == 20);
}

TEST_CASE("RM codes are valid stabilizer codes") {
    for (int m = 3; m <= 7; ++m) {
        CAPTURE(m);
        const auto code = rm_code(m);
        CHECK(code.n == (std::size_t{1} << m) - 1);
        CHECK(code.generator_count() == code.n - 1);
        const auto check = check_code(code);
        CHECK(check.generators_commute);
        CHECK(check.generators_independent);
        CHECK(check.count_is_n_minus_1);
        CHECK(check.logicals_commute_with_stabilizers);
        CHECK(check.logicals_anticommute);
        CHECK(check.logicals_outside_group);
    }
}

TEST_CASE("Steane stabilizers and logicals") {
    const auto code = rm_code(3);
    REQUIRE(code.x_stabs.size() == 3);
    REQUIRE(code.z_stabs.size() == 3);
    CHECK(code.x_stabs[0].op.to_string() == "X1 X3 X5 X7");
    CHECK(code.z_stabs[2].op.to_string() == "Z4 Z5 Z6 Z7");
    CHECK(code.x_stabs[1].origin.label() == "G(1,3)_2^X");
    CHECK(code.logical_x.to_string() == "X1 X2 X3 X4 X5 X6 X7");
    CHECK_FALSE(code.logical_x.commutes(code.logical_z));
}

TEST_CASE("extended code layout") {
    for (int m = 3; m <= 5; ++m) {
        CAPTURE(m);
        const auto ext = extended_code(m);
        CHECK(ext.n == (std::size_t{1} << (m + 1)) - 1);
        CHECK(check_code(ext).ok());
        // logicals live on block one only
        const std::size_t block = (std::size_t{1} << m) - 1;
        for (std::size_t q = block; q < ext.n; ++q) CHECK(ext.logical_x.letter(q) == 'I');
    }
    const auto ext = extended_code(3);
    CHECK(ext.x_stabs.size() == 7);
    CHECK(ext.z_stabs.size() == 7);
    CHECK(ext.x_stabs[0].origin.label() == "(G(1,3)|0)_1^X");
    CHECK(ext.x_stabs[3].op.to_string() == "X1 X3 X5 X7 X9 X11 X13 X15");
}

TEST_CASE("subsystem spec holds both codes") {
    for (int m = 3; m <= 4; ++m) {
        const auto sub = subsystem_spec(m);
        std::vector<PauliOperator> group;
        for (const auto& s : sub.stabilizers) group.push_back(s.op);
        for (const auto& s : sub.gauge_generators) group.push_back(s.op);
        for (const auto& code : {rm_code(m + 1), extended_code(m)})
            for (const auto& g : code.generators()) CHECK(in_group_span(group, g));
        for (const auto& s : sub.stabilizers)
            for (const auto& g : sub.gauge_generators) CHECK(s.op.commutes(g.op));
    }
}

TEST_CASE("triply even X stabilizers of RM(1,4)") {
    const auto code = rm_code(4);
    for (const auto& s : code.x_stabs) CHECK(s.op.weight() % 8 == 0);
}
