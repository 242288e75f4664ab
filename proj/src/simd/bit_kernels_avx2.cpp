#include <immintrin.h>

#include <bit>

#include "bit_kernels_internal.hpp"

namespace rmconv::simd::detail {
namespace {

constexpr std::size_t kWordsPerVec = 4;

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline std::uint64_t fold_lanes(__m256i v) {
    alignas(32) std::uint64_t lanes[kWordsPerVec];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
}

// Nibble-lookup popcount (Mula et al.), accumulated per 64-bit lane.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    const __m256i counts =
        _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t sum_lanes(__m256i v) {
    alignas(32) std::uint64_t lanes[kWordsPerVec];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void xor_into(MutWords dst, Words src) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + kWordsPerVec <= n; i += kWordsPerVec) {
        const __m256i r = _mm256_xor_si256(load(dst.data() + i), load(src.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), r);
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kWordsPerVec <= n; i += kWordsPerVec)
        acc = _mm256_add_epi64(acc, popcount_lanes(load(a.data() + i)));
    std::size_t total = sum_lanes(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

bool and_parity(Words a, Words b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kWordsPerVec <= n; i += kWordsPerVec)
        acc = _mm256_xor_si256(acc, _mm256_and_si256(load(a.data() + i), load(b.data() + i)));
    std::uint64_t fold = fold_lanes(acc);
    for (; i < n; ++i) fold ^= a[i] & b[i];
    return (std::popcount(fold) & 1) != 0;
}

bool symplectic_parity(Words ax, Words az, Words bx, Words bz) {
    const std::size_t n = ax.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kWordsPerVec <= n; i += kWordsPerVec) {
        const __m256i t1 = _mm256_and_si256(load(ax.data() + i), load(bz.data() + i));
        const __m256i t2 = _mm256_and_si256(load(az.data() + i), load(bx.data() + i));
        acc = _mm256_xor_si256(acc, _mm256_xor_si256(t1, t2));
    }
    std::uint64_t fold = fold_lanes(acc);
    for (; i < n; ++i) fold ^= (ax[i] & bz[i]) ^ (az[i] & bx[i]);
    return (std::popcount(fold) & 1) != 0;
}

std::size_t and_popcount(Words a, Words b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kWordsPerVec <= n; i += kWordsPerVec)
        acc = _mm256_add_epi64(
            acc, popcount_lanes(_mm256_and_si256(load(a.data() + i), load(b.data() + i))));
    std::size_t total = sum_lanes(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool is_zero(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kWordsPerVec <= n; i += kWordsPerVec) acc = _mm256_or_si256(acc, load(a.data() + i));
    if (!_mm256_testz_si256(acc, acc)) return false;
    for (; i < n; ++i)
        if (a[i] != 0) return false;
    return true;
}

}  // namespace

const BitKernels& avx2_kernels() {
    static const BitKernels k{Isa::avx2, xor_into,     popcount, and_parity,
                              symplectic_parity, and_popcount, is_zero};
    return k;
}

}  // namespace rmconv::simd::detail
