#pragma once

#include <cstddef>
#include <cstdint>

namespace ogc::kern {

/// Inner-loop primitives for the codeword scan. Each step of the scan folds
/// one generator row into an accumulator and re-counts nonzero positions:
/// packed 64-bit words for GF(2), one byte per symbol for the other
/// characteristic-2 fields (where addition is XOR).
///
/// The scalar implementations are the reference; vector variants must be
/// bit-identical and are checked against them in the test suite.
struct Ops {
    // dst[i] ^= src[i] over nwords; returns popcount of dst afterwards.
    std::uint32_t (*xor_popcount64)(std::uint64_t* dst, const std::uint64_t* src,
                                    std::size_t nwords);
    // dst[i] ^= src[i] over n bytes; returns the number of nonzero bytes of dst.
    std::uint32_t (*xor_count_nonzero8)(std::uint8_t* dst, const std::uint8_t* src,
                                        std::size_t n);
    const char* name;
};

/// Reference implementation, always available.
const Ops& scalar_ops();

/// AVX2 implementation, or nullptr when the build or the CPU lacks it.
const Ops* avx2_ops();

/// Best implementation for this machine. Honors OGC_KERNELS=scalar|avx2 in
/// the environment; selected once on first use.
const Ops& active_ops();

}  // namespace ogc::kern
