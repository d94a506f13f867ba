#include <cstdlib>
#include <cstring>
#include <string>

#include "trifact/error.hpp"
#include "trifact/simd/bitops.hpp"

namespace trifact::simd {

namespace {

using PopFn = std::uint64_t (*)(const std::uint64_t*, const std::uint64_t*, std::size_t);
using BatchFn = void (*)(const std::uint64_t*, const std::uint64_t*, std::size_t, std::size_t,
                         std::uint32_t*);

struct Table {
    Backend backend;
    PopFn pop;
    BatchFn batch;
};

Table table_for(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(__i386__)
        case Backend::Avx2: return {b, avx2::and_popcount, avx2::and_popcount_batch};
#endif
#if defined(__aarch64__)
        case Backend::Neon: return {b, neon::and_popcount, neon::and_popcount_batch};
#endif
        default: return {Backend::Scalar, scalar::and_popcount, scalar::and_popcount_batch};
    }
}

Backend best_available() {
    // TRIFACT_SIMD=scalar forces the reference path
    if (const char* env = std::getenv("TRIFACT_SIMD"); env && std::strcmp(env, "scalar") == 0)
        return Backend::Scalar;
    if (backend_available(Backend::Avx2)) return Backend::Avx2;
    if (backend_available(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

Table& current() {
    static Table t = table_for(best_available());
    return t;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "unknown";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(__i386__)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return current().backend; }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw Error(Errc::PreconditionViolated, std::string("backend not available: ") + backend_name(b));
    current() = table_for(b);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    return current().pop(a, b, words);
}

void and_popcount_batch(const std::uint64_t* query, const std::uint64_t* table, std::size_t words,
                        std::size_t count, std::uint32_t* out) {
    current().batch(query, table, words, count, out);
}

}  // namespace trifact::simd
