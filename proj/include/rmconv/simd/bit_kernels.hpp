#pragma once

// Word-level GF(2) kernels behind BitVector and PauliOperator.
//
// Every kernel has a portable scalar reference. Vector variants (AVX2 on
// x86-64, NEON on AArch64) are selected once at startup from the CPU's
// feature flags and must agree bit-for-bit with the reference. Setting
// RMCONV_ISA=scalar in the environment pins the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace rmconv::simd {

enum class Isa { scalar, avx2, neon };

using Words = std::span<const std::uint64_t>;
using MutWords = std::span<std::uint64_t>;

struct BitKernels {
    Isa isa;
    /// dst ^= src (equal lengths).
    void (*xor_into)(MutWords dst, Words src);
    std::size_t (*popcount)(Words a);
    /// Parity of popcount(a & b), i.e. the GF(2) dot product.
    bool (*and_parity)(Words a, Words b);
    /// Parity of popcount((ax & bz) ^ (az & bx)): the symplectic form.
    bool (*symplectic_parity)(Words ax, Words az, Words bx, Words bz);
    /// popcount(z1 & x2), the transposition count used for Pauli phases.
    std::size_t (*and_popcount)(Words a, Words b);
    bool (*is_zero)(Words a);
};

const BitKernels& scalar_kernels();

/// Kernel table for `isa`, or nullptr when that ISA was not compiled in or
/// the running CPU lacks it.
const BitKernels* kernels_for(Isa isa);

/// The table every library routine uses.
const BitKernels& active_kernels();

/// Overrides the dispatch choice (tests and benchmarks). Throws
/// std::invalid_argument if `isa` is unavailable.
void force_isa(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace rmconv::simd
