#include <bit>

#include "rmconv/simd/bit_kernels.hpp"

namespace rmconv::simd {
namespace {

void xor_into(MutWords dst, Words src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::size_t popcount(Words a) {
    std::size_t total = 0;
    for (auto w : a) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool and_parity(Words a, Words b) {
    std::uint64_t fold = 0;
    for (std::size_t i = 0; i < a.size(); ++i) fold ^= a[i] & b[i];
    return (std::popcount(fold) & 1) != 0;
}

bool symplectic_parity(Words ax, Words az, Words bx, Words bz) {
    std::uint64_t fold = 0;
    for (std::size_t i = 0; i < ax.size(); ++i) fold ^= (ax[i] & bz[i]) ^ (az[i] & bx[i]);
    return (std::popcount(fold) & 1) != 0;
}

std::size_t and_popcount(Words a, Words b) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool is_zero(Words a) {
    std::uint64_t acc = 0;
    for (auto w : a) acc |= w;
    return acc == 0;
}

}  // namespace

const BitKernels& scalar_kernels() {
    static const BitKernels k{Isa::scalar, xor_into,     popcount, and_parity,
                              symplectic_parity, and_popcount, is_zero};
    return k;
}

}  // namespace rmconv::simd
