#include <doctest.h>

#include <stdexcept>

#include <map>

#include "rmconv/conversion.hpp"
#include "rmconv/harness.hpp"

using namespace rmconv;

namespace {

std::vector<std::string> op_strings(const SyndromePlan& plan) {
    std::vector<std::string> out;
    for (const auto& pm : plan.measurements()) out.push_back(pm.op.to_string());
    return out;
}

std::vector<bool> bits(const char* s) {
    std::vector<bool> b;
    for (; *s; ++s) b.push_back(*s == '1');
    return b;
}

}  // namespace

TEST_CASE("conversion plan forward m=3") {
    const auto plan = build_plan(Direction::forward, 3, Mode::full);
    CHECK(op_strings(plan) == std::vector<std::string>{
                                  "Z1 Z3 Z9 Z11", "Z2 Z3 Z10 Z11", "Z3 Z7 Z11 Z15", "Z1 Z5 Z9 Z13",
                                  "Z2 Z6 Z10 Z14", "Z4 Z5 Z12 Z13", "Z8 Z9 Z10 Z11", "Z12 Z13 Z14 Z15",
                                  "X1 X3 X5 X7 X9 X11 X13 X15", "X2 X3 X6 X7 X10 X11 X14 X15",
                                  "X4 X5 X6 X7 X12 X13 X14 X15", "X8 X9 X10 X11 X12 X13 X14 X15"});
    const auto ms = plan.measurements();
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(ms[i].label == "S" + std::to_string(i + 1));

    std::map<std::string, std::vector<std::string>> rules;
    for (const auto& r : plan.combination_rules)
        for (auto i : r.members) rules[r.target].push_back(ms[i].label);
    CHECK(rules["S(1,4)_1^Z"] == std::vector<std::string>{"S3", "S4"});
    CHECK(rules["S(1,4)_2^Z"] == std::vector<std::string>{"S3", "S5"});
    CHECK(rules["S(1,4)_3^Z"] == std::vector<std::string>{"S2", "S3", "S5", "S6"});
    CHECK(rules["S(1,4)_4^Z"] == std::vector<std::string>{"S7", "S8"});
    CHECK(rules["S(1,4)_4^X"] == std::vector<std::string>{"S12"});
}

TEST_CASE("conversion plan backward m=3") {
    const auto plan = build_plan(Direction::backward, 3, Mode::full);
    CHECK(op_strings(plan) == std::vector<std::string>{
                                  "X1 X3 X5 X7", "X2 X3 X6 X7", "X4 X5 X6 X7", "X9 X11 X13 X15",
                                  "X10 X11 X14 X15", "X12 X13 X14 X15", "X8 X9 X10 X11",
                                  "Z1 Z3 Z5 Z7 Z9 Z11 Z13 Z15", "Z2 Z3 Z6 Z7 Z10 Z11 Z14 Z15",
                                  "Z4 Z5 Z6 Z7 Z12 Z13 Z14 Z15", "Z8 Z9 Z10 Z11 Z12 Z13 Z14 Z15"});
    const auto ms = plan.measurements();
    CHECK(ms[0].label == "S'1");
    CHECK(ms[10].label == "S'11");
    std::map<std::string, std::vector<std::string>> rules;
    for (const auto& r : plan.combination_rules)
        for (auto i : r.members) rules[r.target].push_back(ms[i].label);
    CHECK(rules["S(1,4)_1^X"] == std::vector<std::string>{"S'1", "S'4"});
    CHECK(rules["S(1,4)_2^X"] == std::vector<std::string>{"S'2", "S'5"});
    CHECK(rules["S(1,4)_3^X"] == std::vector<std::string>{"S'3", "S'6"});
    CHECK(rules["S(1,4)_4^X"] == std::vector<std::string>{"S'6", "S'7"});
}

TEST_CASE("conversion plan resource counts") {
    auto count = [](Direction d, int m, Mode md, bool split) {
        const auto p = build_plan(d, m, md, split);
        return std::pair{p.measurement_count(), p.total_weight()};
    };
    CHECK(count(Direction::forward, 3, Mode::full, true) == std::pair<std::size_t, std::size_t>{12, 64});
    CHECK(count(Direction::backward, 3, Mode::full, true) == std::pair<std::size_t, std::size_t>{11, 60});
    CHECK(count(Direction::forward, 3, Mode::ft, true) == std::pair<std::size_t, std::size_t>{8, 32});
    CHECK(count(Direction::backward, 3, Mode::ft, true) == std::pair<std::size_t, std::size_t>{7, 28});
    for (int m = 3; m <= 6; ++m) {
        CAPTURE(m);
        const auto mm = static_cast<std::size_t>(m);
        for (auto d : {Direction::forward, Direction::backward}) {
            CHECK(build_plan(d, m, Mode::ft, false).measurement_count() == 2 * mm + 1);
            CHECK(build_plan(d, m, Mode::full, false).measurement_count() == 3 * mm + 2);
        }
    }
    CHECK_THROWS_AS(build_plan(Direction::forward, 2, Mode::full), std::invalid_argument);
}

TEST_CASE("conversion plan rules are GF(2) identities") {
    for (int m = 3; m <= 8; ++m)
        for (auto d : {Direction::forward, Direction::backward}) {
            CAPTURE(m);
            const auto plan = build_plan(d, m, Mode::full);
            const auto ms = plan.measurements();
            REQUIRE(plan.combination_rules.size() == 2 * static_cast<std::size_t>(m + 1));
            for (const auto& r : plan.combination_rules) {
                PauliOperator acc = PauliOperator::identity(r.target_op.n());
                for (auto i : r.members) acc *= ms[i].op;
                CHECK(acc.unsigned_hermitian() == r.target_op);
            }
        }
}

TEST_CASE("conversion plan weight census") {
    for (int m = 3; m <= 6; ++m) {
        CAPTURE(m);
        const std::size_t half = std::size_t{1} << (m - 1), full = std::size_t{1} << m;
        const auto fwd = build_plan(Direction::forward, m, Mode::full, false);
        for (const auto& pm : fwd.gauge_measurements) {
            if (pm.role == MeasurementRole::gauge) CHECK(pm.op.weight() == 4);
            if (pm.role == MeasurementRole::remainder) CHECK(pm.op.weight() <= full);
        }
        for (const auto& pm : fwd.diagnostic_measurements) CHECK(pm.op.weight() == full);
        const auto bwd = build_plan(Direction::backward, m, Mode::full);
        for (const auto& pm : bwd.gauge_measurements) CHECK(pm.op.weight() == half);
        for (const auto& pm : bwd.diagnostic_measurements) CHECK(pm.op.weight() == full);
    }
}

TEST_CASE("conversion split halves commute with the extended code") {
    for (int m = 3; m <= 5; ++m) {
        const auto plan = build_plan(Direction::forward, m, Mode::ft);
        const auto ext = extended_code(m).generators();
        std::size_t halves = 0;
        for (const auto& pm : plan.gauge_measurements) {
            if (pm.role != MeasurementRole::split) continue;
            ++halves;
            CHECK(pm.op.weight() == std::size_t{1} << (m - 1));
            for (const auto& g : ext) CHECK(g.commutes(pm.op));
        }
        CHECK(halves == 2);
    }
}

TEST_CASE("conversion diagnose reads binary digits") {
    CHECK(diagnose(bits("1010")) == 5);
    CHECK(diagnose(bits("1111")) == 15);
    CHECK(diagnose(bits("0000")) == std::nullopt);
    CHECK(diagnose(bits("0001")) == 8);
    for (std::size_t j = 1; j < 32; ++j) {
        std::vector<bool> b(5);
        for (std::size_t i = 0; i < 5; ++i) b[i] = (j >> i) & 1U;
        CHECK(diagnose(b) == j);
    }
}

TEST_CASE("conversion fix syndromes") {
    const auto fwd = build_plan(Direction::forward, 3, Mode::full);
    CHECK(fix_syndromes(fwd, bits("010"), 3) == bits("101"));
    CHECK(fix_syndromes(fwd, bits("010"), std::nullopt) == bits("010"));
    CHECK(fix_syndromes(fwd, bits("000"), 9) == bits("100"));
    const auto bwd = build_plan(Direction::backward, 3, Mode::full);
    CHECK(fix_syndromes(bwd, bits("000"), 7) == bits("111"));
    CHECK(fix_syndromes(bwd, bits("000"), 12) == bits("000"));
    CHECK_THROWS_AS(fix_syndromes(bwd, bits("00"), 7), std::invalid_argument);
}

TEST_CASE("conversion fixing operators forward m=3") {
    const auto problem = fixing_problem(Direction::forward, 3);
    const std::map<std::string, std::string> table{
        {"000", "I"},
        {"001", "X12 X13 X14 X15"},
        {"010", "X9 X11 X13 X15"},
        {"011", "X9 X11 X12 X14"},
        {"100", "X10 X11 X14 X15"},
        {"101", "X10 X11 X12 X13"},
        {"110", "X9 X10 X13 X14"},
        {"111", "X9 X10 X12 X15"}};
    for (const auto& [flags, op] : table) {
        CAPTURE(flags);
        CHECK(solve_fixing_operator(problem, bits(flags.c_str())).to_string() == op);
    }
}

TEST_CASE("conversion fixing operators backward m=3") {
    const auto problem = fixing_problem(Direction::backward, 3);
    const std::map<std::string, std::string> table{
        {"000", "I"},
        {"001", "Z3 Z7 Z11 Z15"},
        {"010", "Z1 Z3 Z9 Z11"},
        {"011", "Z1 Z7 Z9 Z15"},
        {"100", "Z2 Z3 Z10 Z11"},
        {"101", "Z2 Z7 Z10 Z15"},
        {"110", "Z1 Z2 Z9 Z10"},
        {"111", "Z1 Z2 Z3 Z7 Z9 Z10 Z11 Z15"}};
    for (const auto& [flags, op] : table) {
        CAPTURE(flags);
        const auto got = solve_fixing_operator(problem, bits(flags.c_str()));
        CHECK(got.to_string() == op);
        // equivalence modulo stabilizers: same commutation with every generator
        const auto want = PauliOperator::parse(15, op);
        for (const auto& g : extended_code(3).generators()) CHECK(g.commutes(got) == g.commutes(want));
    }
}

TEST_CASE("conversion fixing operators satisfy their constraints at m=4") {
    for (auto d : {Direction::forward, Direction::backward}) {
        const auto problem = fixing_problem(d, 4);
        for (unsigned f = 0; f < 16; ++f) {
            std::vector<bool> flags(4);
            for (unsigned i = 0; i < 4; ++i) flags[i] = (f >> i) & 1U;
            const auto op = solve_fixing_operator(problem, flags);
            for (std::size_t k = 0; k < 4; ++k) CHECK(op.commutes(problem.gauge_rows[k]) != flags[k]);
            for (const auto& c : problem.must_commute) CHECK(op.commutes(c));
            CHECK(op.is_identity() == (f == 0));
        }
    }
    CHECK_THROWS_AS(solve_fixing_operator(fixing_problem(Direction::forward, 3), bits("01")), std::invalid_argument);
}

TEST_CASE("conversion forward no error") {
    const Converter conv(Direction::forward, 3, Mode::full);
    const auto r = conv.run(PauliOperator::identity(15), BranchPolicy::bits(bits("001")));
    CHECK(r.correction.to_string() == "X12 X13 X14 X15");
    CHECK(r.residual_error.is_identity());
    CHECK(r.logical_preserved);
    CHECK(r.target_syndrome_zero);
    CHECK(r.passed());
    for (const auto& g : rm_code(4).generators()) CHECK(r.final_frame.expectation(g) == 1);

    const auto r0 = conv.run(PauliOperator::identity(15), BranchPolicy::bits(bits("000")));
    CHECK(r0.correction.is_identity());
    CHECK(r0.fixing_is_identity());
    CHECK(r.branch_outcomes == bits("001"));
}

TEST_CASE("conversion backward Z5 in full mode") {
    const Converter conv(Direction::backward, 3, Mode::full);
    for (const auto& b : branch_list(3)) {
        const auto r = conv.run(PauliOperator::parse(15, "Z5"), BranchPolicy::bits(b));
        std::vector<bool> gx;
        for (const auto& c : r.combined_syndromes)
            if (c.label.back() == 'X') gx.push_back(c.value);
        CHECK(gx == bits("1010"));
        CHECK(r.diagnosis.z_error_qubit == 5);
        CHECK_FALSE(r.diagnosis.x_error_qubit);
        CHECK(r.correction.z().test(4) != r.fixing_operation.z().test(4));
        CHECK(r.passed());
        CHECK(r.ancilla_block_restored);
        CHECK(r.final_frame == StabilizerFrame::from_code(rm_code(3)));
    }
}

TEST_CASE("conversion Y errors are diagnosed as both components") {
    const Converter conv(Direction::forward, 3, Mode::full);
    const auto r = conv.run(PauliOperator::parse(15, "Y6"), BranchPolicy::bits(bits("110")));
    CHECK(r.diagnosis.x_error_qubit == 6);
    CHECK(r.diagnosis.z_error_qubit == 6);
    CHECK(r.passed());
}

TEST_CASE("conversion ft mode leaves undiagnosed single errors") {
    const Converter fwd(Direction::forward, 3, Mode::ft);
    const auto r = fwd.run(PauliOperator::parse(15, "Z4"), BranchPolicy::bits(bits("011")));
    CHECK_FALSE(r.diagnosis.z_error_qubit);
    CHECK(r.residual_error.to_string() == "Z4");
    CHECK(r.passed());
    const Converter bwd(Direction::backward, 3, Mode::ft);
    const auto b = bwd.run(PauliOperator::parse(15, "X2"), BranchPolicy::bits(bits("101")));
    CHECK(b.residual_error.to_string() == "X2");
    CHECK(b.passed());
    // an X error on block two is dropped with the ancilla block
    const auto b2 = bwd.run(PauliOperator::parse(15, "X12"), BranchPolicy::bits(bits("000")));
    CHECK(b2.residual_error.is_identity());
    CHECK(b2.passed());
}

TEST_CASE("conversion flags double faults") {
    const Converter conv(Direction::forward, 3, Mode::full);
    const auto r = conv.run(parse_error_spec("X:1,X:2", 15), BranchPolicy::bits(bits("000")));
    CHECK_FALSE(r.passed());
    CHECK(r.uncorrectable);
}

TEST_CASE("conversion branch policy") {
    auto p = BranchPolicy::bits(bits("10"));
    CHECK(p.next());
    CHECK_FALSE(p.next());
    CHECK_THROWS_AS(p.next(), std::logic_error);
    auto s1 = BranchPolicy::seeded(42), s2 = BranchPolicy::seeded(42);
    for (int i = 0; i < 20; ++i) CHECK(s1.next() == s2.next());
    const Converter conv(Direction::forward, 3, Mode::full);
    CHECK_THROWS_AS(conv.run(PauliOperator::identity(15), BranchPolicy::bits(bits("01"))), std::logic_error);
}

TEST_CASE("conversion error specs") {
    CHECK(parse_error_spec("none", 15).is_identity());
    CHECK(parse_error_spec("X:5", 15).to_string() == "X5");
    CHECK(parse_error_spec("Y:11", 15).to_string() == "Y11");
    CHECK(parse_error_spec("Z:3,X:3", 15).to_string() == "Y3");
    CHECK_THROWS_AS(parse_error_spec("Q:99", 15), std::invalid_argument);
    CHECK_THROWS_AS(parse_error_spec("X:16", 15), std::invalid_argument);
    CHECK_THROWS_AS(parse_error_spec("X:0", 15), std::invalid_argument);
    CHECK_THROWS_AS(parse_error_spec("X5", 15), std::invalid_argument);
    CHECK(error_label(PauliOperator::identity(3)) == "none");
}

TEST_CASE("conversion at m=5 on sampled errors") {
    for (auto d : {Direction::forward, Direction::backward}) {
        const Converter conv(d, 5, Mode::full);
        const std::size_t n = conv.input_frame().n();
        for (std::size_t q : {std::size_t{1}, std::size_t{17}, std::size_t{32}, n})
            for (char c : {'X', 'Y', 'Z'}) {
                CAPTURE(q);
                const auto r = conv.run(PauliOperator::single(n, q, c), BranchPolicy::seeded(q * 7 + c));
                CHECK(r.passed());
            }
    }
}
