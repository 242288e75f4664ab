#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bit_kernels_internal.hpp"

namespace rmconv::simd {
namespace {

bool cpu_has(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(RMCONV_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
        case Isa::neon:
#if defined(RMCONV_HAVE_NEON)
            return true;  // Advanced SIMD is mandatory on AArch64.
#else
            return false;
#endif
    }
    return false;
}

const BitKernels* pick_default() {
    if (const char* env = std::getenv("RMCONV_ISA")) {
        const std::string want(env);
        if (want == "scalar") return &scalar_kernels();
        if (want == "avx2" && kernels_for(Isa::avx2)) return kernels_for(Isa::avx2);
        if (want == "neon" && kernels_for(Isa::neon)) return kernels_for(Isa::neon);
    }
    if (auto* k = kernels_for(Isa::avx2)) return k;
    if (auto* k = kernels_for(Isa::neon)) return k;
    return &scalar_kernels();
}

std::atomic<const BitKernels*>& active_slot() {
    static std::atomic<const BitKernels*> slot{pick_default()};
    return slot;
}

}  // namespace

const BitKernels* kernels_for(Isa isa) {
    if (!cpu_has(isa)) return nullptr;
    switch (isa) {
        case Isa::scalar:
            return &scalar_kernels();
        case Isa::avx2:
#if defined(RMCONV_HAVE_AVX2)
            return &detail::avx2_kernels();
#else
            return nullptr;
#endif
        case Isa::neon:
#if defined(RMCONV_HAVE_NEON)
            return &detail::neon_kernels();
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const BitKernels& active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    const BitKernels* k = kernels_for(isa);
    if (k == nullptr)
        throw std::invalid_argument("ISA " + std::string(isa_name(isa)) + " not available");
    active_slot().store(k, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

}  // namespace rmconv::simd
