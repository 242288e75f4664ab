#include <arm_neon.h>

#include <bit>

#include "bit_kernels_internal.hpp"

namespace rmconv::simd::detail {
namespace {

constexpr std::size_t kWordsPerVec = 2;

inline std::uint64_t fold_lanes(uint64x2_t v) {
    return vgetq_lane_u64(v, 0) ^ vgetq_lane_u64(v, 1);
}

inline std::size_t count_bits(uint64x2_t v) {
    return static_cast<std::size_t>(vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

void xor_into(MutWords dst, Words src) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + kWordsPerVec <= n; i += kWordsPerVec)
        vst1q_u64(dst.data() + i, veorq_u64(vld1q_u64(dst.data() + i), vld1q_u64(src.data() + i)));
    for (; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0, total = 0;
    for (; i + kWordsPerVec <= n; i += kWordsPerVec) total += count_bits(vld1q_u64(a.data() + i));
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

bool and_parity(Words a, Words b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + kWordsPerVec <= n; i += kWordsPerVec)
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)));
    std::uint64_t fold = fold_lanes(acc);
    for (; i < n; ++i) fold ^= a[i] & b[i];
    return (std::popcount(fold) & 1) != 0;
}

bool symplectic_parity(Words ax, Words az, Words bx, Words bz) {
    const std::size_t n = ax.size();
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + kWordsPerVec <= n; i += kWordsPerVec) {
        const uint64x2_t t1 = vandq_u64(vld1q_u64(ax.data() + i), vld1q_u64(bz.data() + i));
        const uint64x2_t t2 = vandq_u64(vld1q_u64(az.data() + i), vld1q_u64(bx.data() + i));
        acc = veorq_u64(acc, veorq_u64(t1, t2));
    }
    std::uint64_t fold = fold_lanes(acc);
    for (; i < n; ++i) fold ^= (ax[i] & bz[i]) ^ (az[i] & bx[i]);
    return (std::popcount(fold) & 1) != 0;
}

std::size_t and_popcount(Words a, Words b) {
    const std::size_t n = a.size();
    std::size_t i = 0, total = 0;
    for (; i + kWordsPerVec <= n; i += kWordsPerVec)
        total += count_bits(vandq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)));
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool is_zero(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + kWordsPerVec <= n; i += kWordsPerVec) acc = vorrq_u64(acc, vld1q_u64(a.data() + i));
    if ((vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1)) != 0) return false;
    for (; i < n; ++i)
        if (a[i] != 0) return false;
    return true;
}

}  // namespace

const BitKernels& neon_kernels() {
    static const BitKernels k{Isa::neon, xor_into,     popcount, and_parity,
                              symplectic_parity, and_popcount, is_zero};
    return k;
}

}  // namespace rmconv::simd::detail
