#if defined(__aarch64__)

#include <arm_neon.h>

#include "trifact/simd/bitops.hpp"

namespace trifact::simd::neon {

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
    }
    std::uint64_t n = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < words; ++i) n += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return n;
}

void and_popcount_batch(const std::uint64_t* query, const std::uint64_t* table, std::size_t words,
                        std::size_t count, std::uint32_t* out) {
    for (std::size_t r = 0; r < count; ++r)
        out[r] = static_cast<std::uint32_t>(and_popcount(query, table + r * words, words));
}

}  // namespace trifact::simd::neon

#endif
