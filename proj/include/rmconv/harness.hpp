#pragma once

// Exhaustive single-error sweeps over every gauge branch, engine vs dense
// oracle cross-validation at m = 3, and transversal gate checks.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rmconv/conversion.hpp"
#include "rmconv/pauli.hpp"

namespace rmconv {

/// I, then X_q, Y_q, Z_q for q = 1..n.
std::vector<PauliOperator> single_error_list(std::size_t n);

/// The 2^k branch bit strings for k free measurements, in binary counting
/// order with the first bit most significant.
std::vector<std::vector<bool>> branch_list(std::size_t k);
std::string bits_string(const std::vector<bool>& bits);

struct SweepCase {
    PauliOperator error;
    std::vector<bool> branch;
    bool passed = false;
    ConversionReport report;
};

struct SweepResult {
    int m = 0;
    Direction direction = Direction::forward;
    Mode mode = Mode::full;
    std::size_t error_count = 0;
    std::size_t branch_count = 0;
    std::vector<SweepCase> cases;  // sorted by error, then branch
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// No-error branches whose fixing operation is the identity.
    std::size_t identity_fix_branches = 0;

    bool all_passed() const { return failed == 0 && !cases.empty(); }
};

/// threads = 0 uses the hardware concurrency. Results do not depend on it.
SweepResult sweep(int m, Direction direction, Mode mode, unsigned threads = 0);

struct CrossValidation {
    std::size_t trials = 0;
    std::size_t passed = 0;
    double min_fidelity = 1;
    /// Measurement outcomes whose dense probability disagreed with the
    /// engine (forced outcome with p < 1, or free outcome with p ≠ 1/2).
    std::size_t outcome_mismatches = 0;
    std::size_t forced_outcomes = 0;
    std::size_t free_outcomes = 0;
    std::vector<std::string> failures;

    bool ok() const { return trials > 0 && passed == trials && outcome_mismatches == 0; }
};

/// Random (α, β, direction, mode, error, branch) conversions at m = 3,
/// replayed on the dense oracle with the engine's outcomes. The final state
/// must match the target encoding of (α, β), up to the reported residual,
/// with fidelity ≥ 1 − 1e−9 (block one only, backward).
CrossValidation cross_validate(std::size_t trials, std::uint64_t seed);

/// Random sequences of Pauli applications and measurements on the m = 3
/// extended code, run in the engine and the dense oracle side by side.
/// Checks every outcome, the final generators and the tracked logicals.
CrossValidation engine_oracle_sequences(std::size_t trials, std::uint64_t seed);

struct TransversalReport {
    double hadamard_min_fidelity = 0;
    bool hadamard_ok = false;
    double t_zero_fidelity = 0;
    /// "T" or "T†": the logical gate T^⊗15 implements on RM(1,4).
    std::string t_logical;
    double t_min_fidelity = 0;
    /// Same answer on every test state.
    bool t_stable = false;

    bool ok() const { return hadamard_ok && t_stable && t_zero_fidelity >= 1 - 1e-9; }
};

TransversalReport transversal_checks(std::uint64_t seed = 1);

}  // namespace rmconv
