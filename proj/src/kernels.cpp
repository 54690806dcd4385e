#include "ogc/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>

namespace ogc::kern {

namespace {

std::uint32_t xor_popcount64_scalar(std::uint64_t* dst, const std::uint64_t* src,
                                    std::size_t nwords) {
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < nwords; ++i) {
        dst[i] ^= src[i];
        count += static_cast<std::uint32_t>(std::popcount(dst[i]));
    }
    return count;
}

std::uint32_t xor_count_nonzero8_scalar(std::uint8_t* dst, const std::uint8_t* src,
                                        std::size_t n) {
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] ^= src[i];
        count += dst[i] != 0;
    }
    return count;
}

const Ops scalar_table = {xor_popcount64_scalar, xor_count_nonzero8_scalar, "scalar"};

}  // namespace

const Ops& scalar_ops() { return scalar_table; }

const Ops& active_ops() {
    static const Ops* selected = [] {
        const char* pref = std::getenv("OGC_KERNELS");
        if (pref && std::strcmp(pref, "scalar") == 0) return &scalar_table;
        if (const Ops* v = avx2_ops()) return v;
        return &scalar_table;
    }();
    return *selected;
}

}  // namespace ogc::kern
