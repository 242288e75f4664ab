#include <doctest.h>

#include <stdexcept>

#include "rmconv/harness.hpp"

using namespace rmconv;

TEST_CASE("error and branch lists") {
    const auto errors = single_error_list(15);
    CHECK(errors.size() == 46);
    CHECK(errors[0].is_identity());
    CHECK(errors[1].to_string() == "X1");
    CHECK(errors[2].to_string() == "Y1");
    CHECK(errors[45].to_string() == "Z15");
    const auto branches = branch_list(3);
    REQUIRE(branches.size() == 8);
    CHECK(bits_string(branches[1]) == "001");
    CHECK(bits_string(branches[4]) == "100");
}

TEST_CASE("sweep m=3 every direction and mode") {
    for (auto d : {Direction::forward, Direction::backward})
        for (auto md : {Mode::full, Mode::ft}) {
            const auto s = sweep(3, d, md, 2);
            CAPTURE(to_string(d));
            CAPTURE(to_string(md));
            CHECK(s.cases.size() == 368);
            CHECK(s.error_count == 46);
            CHECK(s.branch_count == 8);
            CHECK(s.passed == 368);
            CHECK(s.identity_fix_branches == 1);
            for (const auto& c : s.cases) {
                if (md == Mode::full) CHECK(c.report.residual_error.is_identity());
                CHECK(c.report.residual_error.weight() <= 1);
            }
        }
}

TEST_CASE("sweep results do not depend on the thread count") {
    const auto a = sweep(3, Direction::backward, Mode::ft, 1);
    const auto b = sweep(3, Direction::backward, Mode::ft, 3);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].error == b.cases[i].error);
        CHECK(a.cases[i].branch == b.cases[i].branch);
        CHECK(a.cases[i].report.correction == b.cases[i].report.correction);
        CHECK(a.cases[i].report.final_frame == b.cases[i].report.final_frame);
    }
}

TEST_CASE("engine and dense oracle agree on random sequences") {
    const auto cv = engine_oracle_sequences(100, 12);
    CHECK(cv.trials == 100);
    CHECK(cv.outcome_mismatches == 0);
    CHECK(cv.passed == 100);
    CHECK(cv.forced_outcomes > 100);
    CHECK(cv.free_outcomes > 100);
}

TEST_CASE("conversion cross validation against the dense oracle") {
    const auto cv = cross_validate(40, 2024);
    CHECK(cv.ok());
    CHECK(cv.min_fidelity >= 1 - 1e-9);
    for (const auto& f : cv.failures) MESSAGE(f);
}

TEST_CASE("transversal gates") {
    const auto t = transversal_checks(5);
    CHECK(t.hadamard_ok);
    CHECK(t.t_zero_fidelity >= 1 - 1e-9);
    CHECK(t.t_stable);
    CHECK((t.t_logical == "T" || t.t_logical == "T†"));
    // the answer is a property of the code, not of the sampled states
    CHECK(transversal_checks(77).t_logical == t.t_logical);
}
