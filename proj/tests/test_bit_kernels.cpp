#include <doctest.h>

#include <bit>
#include <cstdlib>
#include <string>
#include <random>
#include <stdexcept>
#include <vector>

#include "rmconv/simd/bit_kernels.hpp"

using namespace rmconv::simd;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, int density) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) {
        x = rng();
        // sparse and dense inputs both matter for popcount paths
        if (density == 0) x &= rng() & rng();
        if (density == 2) x |= rng() | rng();
    }
    return w;
}

// Plain loops, independent of the library's scalar table.
std::size_t naive_popcount(const std::vector<std::uint64_t>& a) {
    std::size_t c = 0;
    for (auto w : a)
        for (int b = 0; b < 64; ++b) c += (w >> b) & 1U;
    return c;
}

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
    std::mt19937_64 rng(11);
    const auto& k = scalar_kernels();
    for (std::size_t n : {0, 1, 2, 3, 5, 8, 13}) {
        auto a = random_words(rng, n, 1), b = random_words(rng, n, 1);
        auto ax = random_words(rng, n, 1), az = random_words(rng, n, 1);
        CHECK(k.popcount(a) == naive_popcount(a));
        std::vector<std::uint64_t> ab(n), mix(n);
        for (std::size_t i = 0; i < n; ++i) {
            ab[i] = a[i] & b[i];
            mix[i] = (ax[i] & b[i]) ^ (az[i] & a[i]);
        }
        CHECK(k.and_popcount(a, b) == naive_popcount(ab));
        CHECK(k.and_parity(a, b) == (naive_popcount(ab) % 2 == 1));
        CHECK(k.symplectic_parity(ax, az, a, b) == (naive_popcount(mix) % 2 == 1));
        auto c = a;
        k.xor_into(c, a);
        CHECK(k.is_zero(c));
    }
}

TEST_CASE("vector kernels agree with the scalar reference") {
    std::vector<const BitKernels*> variants;
    for (Isa isa : {Isa::avx2, Isa::neon})
        if (auto* k = kernels_for(isa)) variants.push_back(k);
    if (variants.empty()) {
        MESSAGE("no vector ISA available on this machine; scalar only");
        return;
    }
    const auto& ref = scalar_kernels();
    std::mt19937_64 rng(99);
    for (const auto* k : variants) {
        CAPTURE(isa_name(k->isa));
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = rng() % 40;  // covers tails of every vector width
            const int density = static_cast<int>(rng() % 3);
            auto a = random_words(rng, n, density), b = random_words(rng, n, density);
            auto c = random_words(rng, n, density), d = random_words(rng, n, density);
            CHECK(k->popcount(a) == ref.popcount(a));
            CHECK(k->and_popcount(a, b) == ref.and_popcount(a, b));
            CHECK(k->and_parity(a, b) == ref.and_parity(a, b));
            CHECK(k->symplectic_parity(a, b, c, d) == ref.symplectic_parity(a, b, c, d));
            CHECK(k->is_zero(a) == ref.is_zero(a));
            std::vector<std::uint64_t> zero(n, 0);
            CHECK(k->is_zero(zero));
            if (n > 0) {
                zero[n - 1] = 1;
                CHECK_FALSE(k->is_zero(zero));
            }
            auto x1 = a, x2 = a;
            k->xor_into(x1, b);
            ref.xor_into(x2, b);
            CHECK(x1 == x2);
        }
    }
}

TEST_CASE("dispatch honours forced ISA") {
    const Isa before = active_kernels().isa;
    force_isa(Isa::scalar);
    CHECK(active_kernels().isa == Isa::scalar);
    if (kernels_for(before)) force_isa(before);
    CHECK(active_kernels().isa == before);
    if (!kernels_for(Isa::neon)) CHECK_THROWS_AS(force_isa(Isa::neon), std::invalid_argument);
}

// Runs in the scalar-pinned ctest entry too (name matches its filter).
TEST_CASE("sweep kernel selection follows RMCONV_ISA") {
    const char* env = std::getenv("RMCONV_ISA");
    if (env && std::string(env) == "scalar") CHECK(active_kernels().isa == Isa::scalar);
    MESSAGE("active kernels: " << isa_name(active_kernels().isa));
}
