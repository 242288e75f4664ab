#pragma once

#include "rmconv/simd/bit_kernels.hpp"

namespace rmconv::simd::detail {

#if defined(RMCONV_HAVE_AVX2)
const BitKernels& avx2_kernels();
#endif
#if defined(RMCONV_HAVE_NEON)
const BitKernels& neon_kernels();
#endif

}  // namespace rmconv::simd::detail
