#include <bit>

#include "trifact/simd/bitops.hpp"

namespace trifact::simd::scalar {

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < words; ++i) n += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return n;
}

void and_popcount_batch(const std::uint64_t* query, const std::uint64_t* table, std::size_t words,
                        std::size_t count, std::uint32_t* out) {
    for (std::size_t i = 0; i < count; ++i)
        out[i] = static_cast<std::uint32_t>(and_popcount(query, table + i * words, words));
}

}  // namespace trifact::simd::scalar
