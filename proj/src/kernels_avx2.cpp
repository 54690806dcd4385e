// AVX2 variants of the scan kernels. Compiled with -mavx2 on x86-64; the
// dispatcher only hands these out after a runtime CPU check.

#include "ogc/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define OGC_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define OGC_HAVE_AVX2_BUILD 0
#endif

namespace ogc::kern {

#if OGC_HAVE_AVX2_BUILD

namespace {

std::uint32_t xor_popcount64_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                  std::size_t nwords) {
    std::size_t i = 0;
    std::uint32_t count = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_xor_si256(a, b);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), x);
        // Rows in this code are a handful of words; the hardware popcnt on the
        // lanes beats a Harley-Seal accumulator at these lengths.
        count += static_cast<std::uint32_t>(_mm_popcnt_u64(_mm256_extract_epi64(x, 0)));
        count += static_cast<std::uint32_t>(_mm_popcnt_u64(_mm256_extract_epi64(x, 1)));
        count += static_cast<std::uint32_t>(_mm_popcnt_u64(_mm256_extract_epi64(x, 2)));
        count += static_cast<std::uint32_t>(_mm_popcnt_u64(_mm256_extract_epi64(x, 3)));
    }
    for (; i < nwords; ++i) {
        dst[i] ^= src[i];
        count += static_cast<std::uint32_t>(_mm_popcnt_u64(dst[i]));
    }
    return count;
}

std::uint32_t xor_count_nonzero8_avx2(std::uint8_t* dst, const std::uint8_t* src,
                                      std::size_t n) {
    std::size_t i = 0;
    std::uint32_t zero_count = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_xor_si256(a, b);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), x);
        __m256i eq = _mm256_cmpeq_epi8(x, zero);
        zero_count += static_cast<std::uint32_t>(
            _mm_popcnt_u32(static_cast<std::uint32_t>(_mm256_movemask_epi8(eq))));
    }
    std::uint32_t tail_nonzero = 0;
    for (; i < n; ++i) {
        dst[i] ^= src[i];
        tail_nonzero += dst[i] != 0;
    }
    const std::size_t vec_len = n - (n % 32);
    return static_cast<std::uint32_t>(vec_len) - zero_count + tail_nonzero;
}

const Ops avx2_table = {xor_popcount64_avx2, xor_count_nonzero8_avx2, "avx2"};

}  // namespace

const Ops* avx2_ops() {
    static const Ops* detected = __builtin_cpu_supports("avx2") ? &avx2_table : nullptr;
    return detected;
}

#else

const Ops* avx2_ops() { return nullptr; }

#endif

}  // namespace ogc::kern
