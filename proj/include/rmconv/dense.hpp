#pragma once

// Dense state-vector oracle for registers of at most 16 qubits.
//
// Qubit q (1-based) is bit q − 1 of the basis index. Paulis act with the
// same convention as PauliOperator: i^phase · X^x Z^z, Z applied first.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rmconv/pauli.hpp"
#include "rmconv/rm_codes.hpp"

namespace rmconv {

using Amplitude = std::complex<double>;

inline constexpr std::size_t dense_qubit_cap = 16;

class DenseState {
public:
    /// |0…0⟩ on n qubits. Throws std::invalid_argument for n > 16.
    explicit DenseState(std::size_t n);

    std::size_t n() const { return n_; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    std::vector<Amplitude>& amplitudes() { return amps_; }

    double norm() const;
    void normalize();

    void apply_pauli(const PauliOperator& p);
    /// ⟨ψ|P|ψ⟩ for a Hermitian P (real within rounding).
    double expectation(const PauliOperator& p) const;
    /// Probability of `outcome` (0 ↔ +1) when measuring P.
    double probability(const PauliOperator& p, bool outcome) const;
    /// Applies (I ± P)/2, renormalizes, returns the outcome probability.
    /// Throws std::domain_error when that probability is below 1e−12.
    double project(const PauliOperator& p, bool outcome);

    /// H on every qubit (fast Walsh–Hadamard transform).
    void apply_hadamard_all();
    /// T (or T† with dagger) on every qubit.
    void apply_t_all(bool dagger = false);

private:
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

/// |⟨a|b⟩|². Throws std::invalid_argument on size mismatch.
double fidelity(const DenseState& a, const DenseState& b);

/// Reduced density matrix of qubits [begin, begin + count) (0-based),
/// row-major, dimension 2^count.
std::vector<Amplitude> reduced_density(const DenseState& s, std::size_t begin, std::size_t count);

/// ⟨ψ|ρ|ψ⟩ with ρ the reduced state of `s` on the first ψ.n() qubits.
double block_fidelity(const DenseState& s, const DenseState& psi);

/// α|0̄⟩ + β|1̄⟩: |0̄⟩ is the uniform superposition over the span of the
/// X-stabilizer supports, |1̄⟩ = X̄|0̄⟩. Throws std::invalid_argument when
/// n > 16 or |α|² + |β|² is not 1.
DenseState dense_encode(Amplitude alpha, Amplitude beta, const CssCode& code);

}  // namespace rmconv
