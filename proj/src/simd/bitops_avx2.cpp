// Built with -mavx2 for this file only; callers reach it through dispatch.

#include <immintrin.h>

#include "trifact/simd/bitops.hpp"

namespace trifact::simd::avx2 {

namespace {

// nibble lookup popcount, summed per 64-bit lane by vpsadbw
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum(__m256i acc) {
    __m128i s = _mm_add_epi64(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

}  // namespace

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, vb)));
    }
    std::uint64_t n = hsum(acc);
    for (; i < words; ++i) n += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return n;
}

void and_popcount_batch(const std::uint64_t* query, const std::uint64_t* table, std::size_t words,
                        std::size_t count, std::uint32_t* out) {
    if (words == 4) {
        // one 256-bit row per table entry, the common case for V(8,2)
        __m256i q = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(query));
        for (std::size_t r = 0; r < count; ++r) {
            __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + r * 4));
            out[r] = static_cast<std::uint32_t>(hsum(popcount_lanes(_mm256_and_si256(q, t))));
        }
        return;
    }
    for (std::size_t r = 0; r < count; ++r)
        out[r] = static_cast<std::uint32_t>(and_popcount(query, table + r * words, words));
}

}  // namespace trifact::simd::avx2
