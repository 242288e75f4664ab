#pragma once

// Order-one punctured Reed-Muller quantum codes RM(1,m) = [[2^m − 1, 1, 3]],
// the extended code that pairs an RM(1,m) block with a 2^m-qubit ancilla
// block, and the subsystem code shared by RM(1,m+1) and the extended code.
//
// Qubit layout of the (2^{m+1} − 1)-qubit register: block one is qubits
// 1..2^m − 1, the interconnecting qubit is 2^m, block two is
// 2^m + 1..2^{m+1} − 1.

#include <cstddef>
#include <string>
#include <vector>

#include "rmconv/gf2.hpp"
#include "rmconv/pauli.hpp"

namespace rmconv {

/// Ḡ(1,m): m × (2^m − 1). Column j (1-based) holds the binary digits of j,
/// least significant digit in row 1. Throws std::invalid_argument for m < 3.
BitMatrix generator_matrix(int m);

/// H̃(1,m): (2^m − 2m − 2) × (2^m − 1). H̃(1,3) is the empty 0 × 7 matrix.
/// Throws std::invalid_argument for m < 3.
BitMatrix h_tilde(int m);

/// Where a stabilizer came from: which matrix, which 1-based row, which block
/// placement. Conversion plans refer to rows by these names.
struct StabilizerOrigin {
    enum class Matrix { g, h_tilde };
    enum class Placement { whole, first_block, last_block };

    Matrix matrix = Matrix::g;
    int m = 0;  // the matrix is Ḡ(1,m) or H̃(1,m)
    int row = 0;
    Placement placement = Placement::whole;
    PauliKind kind = PauliKind::x;

    std::string label() const;
};

struct LabeledStabilizer {
    PauliOperator op;
    StabilizerOrigin origin;
};

struct CssCode {
    std::string label;
    int m = 0;
    std::size_t n = 0;
    std::vector<LabeledStabilizer> x_stabs;
    std::vector<LabeledStabilizer> z_stabs;
    PauliOperator logical_x;
    PauliOperator logical_z;

    /// X-type generators followed by Z-type generators.
    std::vector<PauliOperator> generators() const;
    std::size_t generator_count() const { return x_stabs.size() + z_stabs.size(); }
};

struct SubsystemSpec {
    int m = 0;
    std::vector<LabeledStabilizer> stabilizers;
    std::vector<LabeledStabilizer> gauge_generators;
};

/// RM(1,m) on 2^m − 1 qubits: X stabilizers Ḡ(1,m)^X, Z stabilizers
/// Ḡ(1,m)^Z then H̃(1,m)^Z, logicals X^⊗n and Z^⊗n.
CssCode rm_code(int m);

/// Extended code on 2^{m+1} − 1 qubits carrying the logical qubit of an
/// RM(1,m) block. Logicals are the RM(1,m) logicals on block one.
CssCode extended_code(int m);

/// Subsystem code containing both extended_code(m) and rm_code(m+1).
SubsystemSpec subsystem_spec(int m);

struct CodeCheck {
    bool generators_commute = false;
    bool generators_independent = false;
    bool count_is_n_minus_1 = false;
    bool logicals_commute_with_stabilizers = false;
    bool logicals_anticommute = false;
    bool logicals_outside_group = false;

    bool ok() const {
        return generators_commute && generators_independent && count_is_n_minus_1 &&
               logicals_commute_with_stabilizers && logicals_anticommute && logicals_outside_group;
    }
};

CodeCheck check_code(const CssCode& code);

/// True when p's x|z image is in the span of the generators' images
/// (membership up to phase).
bool in_group_span(const std::vector<PauliOperator>& generators, const PauliOperator& p);

}  // namespace rmconv
