#pragma once

// Symbolic simulation of a one-logical-qubit stabilizer state.
//
// A frame holds n − 1 commuting generators whose phases carry their signs
// (the state is a +1 eigenstate of each stored operator, phase included),
// plus tracked logical operators: the operators that act on the current
// state the way the original X̄ and Z̄ acted on the input. The logical
// amplitudes themselves are never represented.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rmconv/pauli.hpp"
#include "rmconv/rm_codes.hpp"

namespace rmconv {

struct MeasurementResult {
    bool outcome = false;  // 0 ↔ eigenvalue +1
    bool deterministic = false;
};

/// Outcome source for a non-deterministic measurement: a forced bit or a
/// seeded generator.
class BranchChoice {
public:
    static BranchChoice forced(bool bit) { return BranchChoice(bit, nullptr); }
    static BranchChoice random(std::mt19937_64& rng) { return BranchChoice(false, &rng); }

    bool draw() const { return rng_ ? ((*rng_)() & 1U) != 0 : bit_; }

private:
    BranchChoice(bool bit, std::mt19937_64* rng) : bit_(bit), rng_(rng) {}
    bool bit_;
    std::mt19937_64* rng_;
};

class StabilizerFrame {
public:
    StabilizerFrame() = default;
    /// Throws std::invalid_argument when the frame invariants do not hold.
    StabilizerFrame(std::vector<PauliOperator> generators, PauliOperator logical_x, PauliOperator logical_z);

    /// All generators with sign +1 and the code's logicals.
    static StabilizerFrame from_code(const CssCode& code);

    std::size_t n() const { return logical_x_.n(); }
    const std::vector<PauliOperator>& generators() const { return generators_; }
    const PauliOperator& logical_x() const { return logical_x_; }
    const PauliOperator& logical_z() const { return logical_z_; }

    /// Conjugates the frame by p: generators and logicals that anticommute
    /// with p change sign.
    void apply_pauli(const PauliOperator& p);

    /// Ideal projective measurement of a Hermitian Pauli. Throws
    /// std::invalid_argument for a size mismatch or a non-Hermitian operator
    /// and std::domain_error when the measurement would reveal the logical
    /// state.
    MeasurementResult measure(const PauliOperator& p, BranchChoice branch);

    /// +1 or −1 when ±p (p Hermitian) lies in the signed stabilizer group,
    /// nullopt otherwise. Generators are multiplied in ascending index order.
    std::optional<int> expectation(const PauliOperator& p) const;

    /// True when measuring p would give a forced outcome.
    bool is_deterministic(const PauliOperator& p) const;

    /// Re-checks the invariants; throws std::logic_error on violation.
    void check_invariants() const;

    /// New frame on the qubits [begin, begin + code.n): generators are the
    /// code's stabilizers padded into the full register, signed by their
    /// current expectations; logicals are the code's logicals signed by the
    /// expectations of (tracked logical · padded code logical). Returns
    /// nullopt when any of those expectations is not deterministic, i.e. the
    /// block is not in a pure code state.
    std::optional<StabilizerFrame> restrict_to_code(const CssCode& code, std::size_t begin) const;

    bool operator==(const StabilizerFrame&) const = default;

private:
    std::vector<PauliOperator> generators_;
    PauliOperator logical_x_;
    PauliOperator logical_z_;
};

/// Fresh extended code frame (RM(1,m) block ⊗ ancilla block), all signs +1.
StabilizerFrame prepare_extended(int m);

/// Value-semantics wrapper: returns the post-measurement frame and result.
std::pair<StabilizerFrame, MeasurementResult> measure(StabilizerFrame frame, const PauliOperator& p,
                                                      BranchChoice branch);
StabilizerFrame apply_pauli(StabilizerFrame frame, const PauliOperator& p);

struct Branch {
    std::vector<bool> outcomes;  // one entry per measured operator
    std::vector<bool> random;    // whether that entry was a free choice
    StabilizerFrame frame;
};

/// Every outcome branch of measuring `ops` in order: 2^k branches for the k
/// non-deterministic measurements, branch order by binary counting with the
/// first free measurement most significant. Throws std::invalid_argument if
/// the operators do not pairwise commute.
std::vector<Branch> branch_enumerate(const StabilizerFrame& frame, const std::vector<PauliOperator>& ops);

}  // namespace rmconv
