#pragma once

// Gauge-fixing conversion between RM(1,m) and RM(1,m+1).
//
// Forward: the input is the extended code (RM(1,m) block plus ancilla
// block). The m Z-type gauge rows H̃(1,m+1)_1..m are measured (their outcomes
// are random), then lightweight stand-ins for the Ḡ(1,m+1)^Z rows whose
// outcomes XOR back to the full stabilizer syndromes. Backward: the input is
// RM(1,m+1); the X-type gauge rows (Ḡ(1,m)|0)^X are measured, then
// stand-ins for Ḡ(1,m+1)^X. In full mode the Ḡ(1,m+1) rows of the other
// Pauli type are measured as well, so both error types are diagnosed.
//
// A single pre-existing Pauli error is located from the Ḡ(1,m+1) syndrome
// (binary digits of the qubit index), the gauge outcomes it flipped are
// corrected, and one composite Pauli fixes the gauge and removes the error
// in a single step.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rmconv/pauli.hpp"
#include "rmconv/rm_codes.hpp"
#include "rmconv/stabilizer.hpp"

namespace rmconv {

enum class Direction { forward, backward };
enum class Mode { full, ft };

std::string_view to_string(Direction d);
std::string_view to_string(Mode m);

enum class MeasurementRole { gauge, remainder, split, diagnostic };
std::string_view to_string(MeasurementRole r);

struct PlannedMeasurement {
    std::string label;  // "S3", "S'5"
    PauliOperator op;
    MeasurementRole role;
    std::string stands_for;  // the stabilizer row this measurement is derived from
};

/// target = XOR of the listed measurements' outcomes.
struct CombinationRule {
    std::string target;  // "S(1,4)_1^Z"
    PauliOperator target_op;
    std::vector<std::size_t> members;  // indices into SyndromePlan::measurements()
};

struct SyndromePlan {
    Direction direction = Direction::forward;
    Mode mode = Mode::full;
    int m = 0;
    bool split = true;

    /// Gauge rows, then simplified remainders (and split halves).
    std::vector<PlannedMeasurement> gauge_measurements;
    /// Full mode only: the Ḡ(1,m+1) rows of the other Pauli type.
    std::vector<PlannedMeasurement> diagnostic_measurements;
    /// One rule per Ḡ(1,m+1) row of each measured type, in row order;
    /// the measured-type rules come first.
    std::vector<CombinationRule> combination_rules;

    /// gauge_measurements followed by diagnostic_measurements (execution order).
    std::vector<PlannedMeasurement> measurements() const;
    std::size_t gauge_row_count() const { return static_cast<std::size_t>(m); }
    /// Pauli type of the gauge rows: Z forward, X backward.
    PauliKind gauge_kind() const { return direction == Direction::forward ? PauliKind::z : PauliKind::x; }
    std::size_t measurement_count() const;
    std::size_t total_weight() const;
};

/// Throws std::invalid_argument for m < 3. With split = false the last
/// forward row is measured whole.
SyndromePlan build_plan(Direction direction, int m, Mode mode, bool split = true);

/// Qubit whose binary expansion (first bit least significant) equals `bits`;
/// nullopt for the all-zero pattern. Result is 1-based.
std::optional<std::size_t> diagnose(const std::vector<bool>& bits);

/// Flips gauge outcome k iff the diagnosed (1-based) qubit lies in the
/// support of gauge row k.
std::vector<bool> fix_syndromes(const SyndromePlan& plan, const std::vector<bool>& raw_gauge,
                                std::optional<std::size_t> diagnosed);

/// Operators the fixing solver must respect, and the space it searches.
struct FixingProblem {
    std::vector<PauliOperator> gauge_rows;
    std::vector<PauliOperator> must_commute;
    std::vector<PauliOperator> candidate_basis;
};

/// Forward: X-type operators on block two, commuting with every RM(1,m+1)
/// stabilizer other than the gauge rows and with its logicals. Backward:
/// products of the Z-type gauge rows H̃(1,m+1)_1..m, commuting with every
/// other extended-code stabilizer and its logicals.
FixingProblem fixing_problem(Direction direction, int m);

/// Operator in span(candidate_basis) that anticommutes with exactly the
/// flagged gauge rows and commutes with everything in must_commute; minimal
/// weight, ties broken by lexicographically smallest 1-based support.
/// Throws std::logic_error when no solution exists.
PauliOperator solve_fixing_operator(const FixingProblem& problem, const std::vector<bool>& flagged);

struct ErrorDiagnosis {
    std::optional<std::size_t> x_error_qubit;  // 1-based
    std::optional<std::size_t> z_error_qubit;
};

struct LabeledBit {
    std::string label;
    bool value;
};

/// Supplies the outcomes of non-deterministic measurements: explicit bits
/// consumed in order, or a seeded generator.
class BranchPolicy {
public:
    static BranchPolicy bits(std::vector<bool> bits) { return BranchPolicy(std::move(bits), std::nullopt); }
    static BranchPolicy seeded(std::uint64_t seed) { return BranchPolicy({}, seed); }

    /// Throws std::logic_error when explicit bits run out.
    bool next();

private:
    BranchPolicy(std::vector<bool> bits, std::optional<std::uint64_t> seed);
    std::vector<bool> bits_;
    std::size_t pos_ = 0;
    std::optional<std::mt19937_64> rng_;
};

struct ConversionReport {
    Direction direction = Direction::forward;
    Mode mode = Mode::full;
    int m = 0;
    PauliOperator injected_error;

    std::vector<PlannedMeasurement> measurements;
    std::vector<bool> deterministic;          // per measurement
    std::vector<bool> branch_outcomes;        // outcomes of the free measurements
    std::vector<LabeledBit> raw_syndromes;    // per measurement
    std::vector<LabeledBit> combined_syndromes;
    std::vector<LabeledBit> fixed_syndromes;  // the m gauge rows after fixing

    ErrorDiagnosis diagnosis;
    PauliOperator fixing_operation;  // X_sub forward, Z_sub backward
    PauliOperator correction;        // fixing · detected errors

    /// Target code syndrome after correction (verification round).
    std::vector<bool> target_syndrome;
    bool target_syndrome_zero = false;
    /// Full mode: block two back in its ancilla state (backward only).
    bool ancilla_block_restored = true;
    PauliOperator residual_error;  // on the target code's qubits
    bool logical_preserved = false;
    bool uncorrectable = false;

    std::size_t measurement_count = 0;
    std::size_t total_weight = 0;

    /// The converted state on the target code's qubits.
    StabilizerFrame final_frame;

    /// Full: residual is identity with logicals preserved. FT: residual
    /// weight ≤ 1 with logicals preserved modulo it.
    bool passed() const;
    bool fixing_is_identity() const { return fixing_operation.is_identity(); }
};

/// Reusable conversion setup for one (direction, m, mode).
class Converter {
public:
    Converter(Direction direction, int m, Mode mode, bool split = true);

    const SyndromePlan& plan() const { return plan_; }
    Direction direction() const { return plan_.direction; }
    Mode mode() const { return plan_.mode; }
    int m() const { return plan_.m; }

    /// The fault-free input: the extended code forward, RM(1,m+1) backward.
    StabilizerFrame input_frame() const;
    const CssCode& target_code() const { return target_; }

    /// Injects `error` into a fresh input and converts.
    ConversionReport run(const PauliOperator& error, BranchPolicy branch) const;
    /// Converts an arbitrary input frame; `injected` is only recorded.
    ConversionReport convert(StabilizerFrame frame, BranchPolicy branch, const PauliOperator& injected) const;

private:
    SyndromePlan plan_;
    FixingProblem fixing_;
    CssCode source_;   // input code
    CssCode landing_;  // code the register is in after correction
    CssCode target_;   // code the report is assessed against
};

ConversionReport convert(StabilizerFrame frame, Direction direction, int m, Mode mode, BranchPolicy branch);

/// Parses "none", "X:5", "Y:11", "Z:3", or a comma-separated list of these.
/// Throws std::invalid_argument for malformed text or out-of-range qubits.
PauliOperator parse_error_spec(std::string_view spec, std::size_t n);
std::string error_label(const PauliOperator& error);

}  // namespace rmconv
