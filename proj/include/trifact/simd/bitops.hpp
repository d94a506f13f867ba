#pragma once

// AND + popcount over word arrays. Subspaces are stored as bitmaps of their
// nonzero vectors, so popcount(a & b) = q^dim(U cap W) - 1.

#include <cstddef>
#include <cstdint>

namespace trifact::simd {

enum class Backend { Scalar, Avx2, Neon };

const char* backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
// Throws PreconditionViolated when the backend is not available here.
void set_backend(Backend b);

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
// out[i] = popcount(query & table[i*words ...]) for i < count.
void and_popcount_batch(const std::uint64_t* query, const std::uint64_t* table, std::size_t words,
                        std::size_t count, std::uint32_t* out);

namespace scalar {
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void and_popcount_batch(const std::uint64_t* query, const std::uint64_t* table, std::size_t words,
                        std::size_t count, std::uint32_t* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void and_popcount_batch(const std::uint64_t* query, const std::uint64_t* table, std::size_t words,
                        std::size_t count, std::uint32_t* out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void and_popcount_batch(const std::uint64_t* query, const std::uint64_t* table, std::size_t words,
                        std::size_t count, std::uint32_t* out);
}  // namespace neon
#endif

}  // namespace trifact::simd
