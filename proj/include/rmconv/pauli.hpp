#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "rmconv/gf2.hpp"

namespace rmconv {

enum class PauliKind { x, z };

/// n-qubit Pauli operator i^phase · ∏_q X_q^{x_q} Z_q^{z_q}, with X written
/// before Z on each qubit. Under this convention Y = i·XZ has phase 1, and a
/// Hermitian operator has phase ≡ (number of Y positions) mod 2.
class PauliOperator {
public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n);
    PauliOperator(BitVector x, BitVector z, unsigned phase = 0);

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    /// X-type sets x := row; Z-type sets z := row.
    static PauliOperator from_row(const BitVector& row, PauliKind kind);
    /// Single-qubit Hermitian Pauli; `qubit` is 1-based, `letter` one of I/X/Y/Z.
    static PauliOperator single(std::size_t n, std::size_t qubit, char letter);
    /// Parses "X1 X3 Y5 -Z7"-style text (1-based, optional leading sign); "I" is identity.
    static PauliOperator parse(std::size_t n, std::string_view text);

    std::size_t n() const { return x_.size(); }
    const BitVector& x() const { return x_; }
    const BitVector& z() const { return z_; }
    unsigned phase() const { return phase_; }

    std::size_t weight() const;
    /// True when x and z are both zero, regardless of phase.
    bool is_identity() const;
    bool is_hermitian() const;
    /// +1 or −1 for a Hermitian operator, in front of the tensor product of
    /// Hermitian I/X/Y/Z letters. Throws std::logic_error otherwise.
    int sign() const;

    bool commutes(const PauliOperator& other) const;

    PauliOperator operator*(const PauliOperator& rhs) const;
    PauliOperator& operator*=(const PauliOperator& rhs);
    PauliOperator negated() const;
    /// Same x/z with phase chosen so the operator is Hermitian with sign +1.
    PauliOperator unsigned_hermitian() const;

    /// Restriction to qubits [begin, begin + count) (0-based), as a Hermitian
    /// operator with sign +1.
    PauliOperator restricted(std::size_t begin, std::size_t count) const;
    /// Tensor with identity: `before` qubits in front, `after` behind.
    PauliOperator padded(std::size_t before, std::size_t after) const;

    /// 'I', 'X', 'Y' or 'Z' on a 0-based qubit.
    char letter(std::size_t q) const;
    /// "Z1 Z3 Z9 Z11"; "-" prefix for sign −1, "I" for identity, "i"/"-i" for
    /// non-Hermitian phases.
    std::string to_string() const;

    bool operator==(const PauliOperator&) const = default;

private:
    void require_same_n(const PauliOperator& other, const char* what) const;

    BitVector x_;
    BitVector z_;
    unsigned phase_ = 0;
};

/// Symplectic row x|z (length 2n), the GF(2) image used for group membership.
BitVector symplectic_vector(const PauliOperator& p);

inline bool commutes(const PauliOperator& a, const PauliOperator& b) { return a.commutes(b); }
inline PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) { return a * b; }
inline PauliOperator from_row(const BitVector& row, PauliKind kind) { return PauliOperator::from_row(row, kind); }

}  // namespace rmconv
