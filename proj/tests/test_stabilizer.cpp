#include <doctest.h>

#include <stdexcept>

#include <random>

#include "rmconv/stabilizer.hpp"

using namespace rmconv;

TEST_CASE("fresh frames satisfy the invariants") {
    for (int m = 3; m <= 5; ++m) {
        CHECK_NOTHROW(StabilizerFrame::from_code(rm_code(m)).check_invariants());
        CHECK_NOTHROW(prepare_extended(m).check_invariants());
    }
    CHECK_THROWS_AS(StabilizerFrame({PauliOperator::parse(3, "X1"), PauliOperator::parse(3, "Z1")},
                                    PauliOperator::parse(3, "X2"), PauliOperator::parse(3, "Z2")),
                    std::invalid_argument);
}

TEST_CASE("expectation of stabilizer products and errors") {
    auto f = StabilizerFrame::from_code(rm_code(3));
    const auto s = PauliOperator::parse(7, "X1 X3 X5 X7") * PauliOperator::parse(7, "X2 X3 X6 X7");
    CHECK(f.expectation(s) == 1);
    CHECK(f.expectation(PauliOperator::parse(7, "-X1 X2 X5 X6")) == -1);
    CHECK_FALSE(f.expectation(PauliOperator::parse(7, "Z1")).has_value());
    f.apply_pauli(PauliOperator::parse(7, "X5"));
    CHECK(f.expectation(PauliOperator::parse(7, "Z1 Z3 Z5 Z7")) == -1);
    CHECK(f.expectation(PauliOperator::parse(7, "Z2 Z3 Z6 Z7")) == 1);
    CHECK(f.expectation(PauliOperator::parse(7, "Z4 Z5 Z6 Z7")) == -1);
}

TEST_CASE("measuring the logical throws") {
    auto f = StabilizerFrame::from_code(rm_code(3));
    CHECK_THROWS_AS(f.measure(PauliOperator::parse(7, "Z1 Z2 Z3 Z4 Z5 Z6 Z7"), BranchChoice::forced(false)),
                    std::domain_error);
    CHECK_THROWS_AS(f.measure(PauliOperator::parse(8, "Z1"), BranchChoice::forced(false)), std::invalid_argument);
}

TEST_CASE("measurement is idempotent") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        auto f = prepare_extended(3);
        PauliOperator p = PauliOperator::identity(15);
        for (int k = 0; k < 3; ++k) p *= PauliOperator::single(15, 1 + rng() % 15, "XYZ"[rng() % 3]);
        p = p.unsigned_hermitian();
        if (p.is_identity()) continue;
        MeasurementResult r1;
        try {
            r1 = f.measure(p, BranchChoice::random(rng));
        } catch (const std::domain_error&) {
            continue;
        }
        const auto snapshot = f;
        const auto r2 = f.measure(p, BranchChoice::forced(!r1.outcome));
        CHECK(r2.deterministic);
        CHECK(r2.outcome == r1.outcome);
        CHECK(f == snapshot);
        CHECK_NOTHROW(f.check_invariants());
    }
}

TEST_CASE("gauge rows on the extended code branch eight ways") {
    const auto h = h_tilde(4);
    std::vector<PauliOperator> ops;
    for (std::size_t i = 0; i < 3; ++i) ops.push_back(PauliOperator::from_row(h.row(i), PauliKind::z));
    const auto branches = branch_enumerate(prepare_extended(3), ops);
    REQUIRE(branches.size() == 8);
    for (std::size_t b = 0; b < 8; ++b) {
        CHECK(branches[b].random == std::vector<bool>{true, true, true});
        for (std::size_t i = 0; i < 3; ++i) CHECK(branches[b].outcomes[i] == (((b >> (2 - i)) & 1U) != 0));
        CHECK_NOTHROW(branches[b].frame.check_invariants());
    }
}

TEST_CASE("existing generators give a single all-zero branch") {
    const auto f = prepare_extended(3);
    const auto branches = branch_enumerate(f, f.generators());
    REQUIRE(branches.size() == 1);
    for (bool b : branches[0].outcomes) CHECK_FALSE(b);
    CHECK(branches[0].frame == f);
}

TEST_CASE("an X error off the gauge supports leaves their statistics alone") {
    const auto h = h_tilde(4);
    std::vector<PauliOperator> ops;
    for (std::size_t i = 0; i < 3; ++i) ops.push_back(PauliOperator::from_row(h.row(i), PauliKind::z));
    auto f = prepare_extended(3);
    f.apply_pauli(PauliOperator::parse(15, "X5"));
    const auto branches = branch_enumerate(f, ops);
    CHECK(branches.size() == 8);
    CHECK_THROWS_AS(branch_enumerate(f, {PauliOperator::parse(15, "X1"), PauliOperator::parse(15, "Z1")}),
                    std::invalid_argument);
}

TEST_CASE("restriction to block one recovers the Steane frame") {
    const auto f = prepare_extended(3);
    const auto r = f.restrict_to_code(rm_code(3), 0);
    REQUIRE(r);
    CHECK(*r == StabilizerFrame::from_code(rm_code(3)));
    auto g = f;
    g.apply_pauli(PauliOperator::parse(15, "Z1"));
    const auto r2 = g.restrict_to_code(rm_code(3), 0);
    REQUIRE(r2);
    CHECK(r2->expectation(PauliOperator::parse(7, "X1 X3 X5 X7")) == -1);
}
