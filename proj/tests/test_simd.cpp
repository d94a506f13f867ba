#include <random>

#include "doctest.h"
#include "support.hpp"
#include "trifact/simd/bitops.hpp"
#include "trifact/table.hpp"

using namespace trifact;
using namespace trifact::simd;

namespace {

std::vector<Backend> available() {
    std::vector<Backend> out;
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon})
        if (backend_available(b)) out.push_back(b);
    return out;
}

std::uint64_t call(Backend b, const std::uint64_t* x, const std::uint64_t* y, std::size_t w) {
    switch (b) {
#if defined(__x86_64__) || defined(__i386__)
        case Backend::Avx2: return avx2::and_popcount(x, y, w);
#endif
#if defined(__aarch64__)
        case Backend::Neon: return neon::and_popcount(x, y, w);
#endif
        default: return scalar::and_popcount(x, y, w);
    }
}

void call_batch(Backend b, const std::uint64_t* qv, const std::uint64_t* t, std::size_t w, std::size_t n,
                std::uint32_t* out) {
    switch (b) {
#if defined(__x86_64__) || defined(__i386__)
        case Backend::Avx2: avx2::and_popcount_batch(qv, t, w, n, out); return;
#endif
#if defined(__aarch64__)
        case Backend::Neon: neon::and_popcount_batch(qv, t, w, n, out); return;
#endif
        default: scalar::and_popcount_batch(qv, t, w, n, out);
    }
}

}  // namespace

TEST_CASE("every available backend matches the scalar kernel") {
    std::mt19937_64 rng(99);
    for (Backend b : available()) {
        for (std::size_t words : {0, 1, 3, 4, 5, 8, 12, 13, 64}) {
            for (int t = 0; t < 50; ++t) {
                std::vector<std::uint64_t> x(words), y(words);
                for (auto& v : x) v = rng();
                for (auto& v : y) v = rng() & rng();
                REQUIRE(call(b, x.data(), y.data(), words) == scalar::and_popcount(x.data(), y.data(), words));
            }
            std::size_t count = 37;
            std::vector<std::uint64_t> q(words), tab(words * count);
            for (auto& v : q) v = rng();
            for (auto& v : tab) v = rng();
            std::vector<std::uint32_t> a(count), s(count);
            call_batch(b, q.data(), tab.data(), words, count, a.data());
            scalar::and_popcount_batch(q.data(), tab.data(), words, count, s.data());
            REQUIRE(a == s);
        }
    }
}

TEST_CASE("all-ones and all-zeros edge inputs") {
    for (Backend b : available()) {
        std::vector<std::uint64_t> ones(9, ~0ULL), zeros(9, 0);
        CHECK(call(b, ones.data(), ones.data(), 9) == 9 * 64);
        CHECK(call(b, ones.data(), zeros.data(), 9) == 0);
    }
}

TEST_CASE("dispatch can be forced to scalar and back") {
    Backend before = active_backend();
    set_backend(Backend::Scalar);
    CHECK(active_backend() == Backend::Scalar);
    set_backend(before);
    CHECK(active_backend() == before);
    if (!backend_available(Backend::Neon)) CHECK_THROWS_AS(set_backend(Backend::Neon), Error);
}

TEST_CASE("intersection dimensions through bitmaps agree on every backend") {
    std::mt19937_64 rng(1);
    for (std::uint64_t q : {2, 3}) {
        Field f = Field::of_order(q);
        SubspaceTable table(f, 5, 2);
        REQUIRE(table.has_bitmaps());
        Backend before = active_backend();
        for (int t = 0; t < 10; ++t) {
            Subspace s = testsupport::random_subspace(f, 5, 1 + rng() % 3, rng);
            std::vector<std::vector<std::uint8_t>> per_backend;
            for (Backend b : available()) {
                set_backend(b);
                per_backend.push_back(table.intersection_dims(s));
            }
            for (auto& v : per_backend) REQUIRE(v == per_backend.front());
            for (std::size_t i = 0; i < table.size(); i += 17)
                CHECK(per_backend.front()[i] == intersection_dim(s, table.at(i)));
        }
        set_backend(before);
    }
}
