#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "trifact/subspace.hpp"
#include "trifact/table.hpp"

using namespace trifact;
using namespace testsupport;

namespace {

// distinct m-dim vector sets spanned by m-tuples of vectors
std::size_t brute_grassmannian_size(const Field& f, std::size_t n, std::size_t m) {
    const std::uint64_t q = f.order();
    std::uint64_t nv = 1;
    for (std::size_t i = 0; i < n; ++i) nv *= q;
    std::set<std::set<std::uint64_t>> seen;
    std::vector<std::uint64_t> pick(m, 0);
    std::uint64_t target = 1;
    for (std::size_t i = 0; i < m; ++i) target *= q;
    for (;;) {
        Mat g(f, m, n);
        for (std::size_t r = 0; r < m; ++r) {
            std::uint64_t c = pick[r];
            for (std::size_t j = 0; j < n; ++j) {
                g(r, j) = c % q;
                c /= q;
            }
        }
        auto vs = vector_set(g);
        if (vs.size() == target) seen.insert(vs);
        std::size_t i = m;
        bool carry = true;
        while (i-- > 0) {
            if (++pick[i] < nv) {
                carry = false;
                break;
            }
            pick[i] = 0;
        }
        if (carry) break;
    }
    return seen.size();
}

}  // namespace

TEST_CASE("Grassmannian sizes against vector-set enumeration") {
    Field f2 = Field::of_order(2), f3 = Field::of_order(3);
    CHECK(grassmannian(f3, 4, 2).size() == brute_grassmannian_size(f3, 4, 2));
    CHECK(grassmannian(f3, 4, 2).size() == 130);
    CHECK(grassmannian(f2, 6, 3).size() == brute_grassmannian_size(f2, 6, 3));
    CHECK(grassmannian(f2, 6, 3).size() == 1395);
    CHECK(gaussian_u64(6, 3, 2) == 1395);
    CHECK(gaussian_u64(4, 2, 3) == 130);
    CHECK(gaussian_u64(8, 4, 2) == 200787);
    for (std::uint64_t q : {2, 3, 4})
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t m = 0; m <= n; ++m) {
                auto g = grassmannian(Field::of_order(q), n, m);
                CHECK(g.size() == gaussian_u64(n, m, q));
                std::set<Subspace> uniq(g.begin(), g.end());
                CHECK(uniq.size() == g.size());
            }
}

TEST_CASE("Grassmannian order: pivots then free entries") {
    Field f = Field::of_order(2);
    auto g = grassmannian(f, 4, 2);
    CHECK(g[0].basis() == Mat::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
    CHECK(g[1].basis() == Mat::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 1}}, 4));
    CHECK(g[4].basis() == Mat::from_rows(f, {{1, 0, 0, 1}, {0, 1, 0, 0}}, 4));
    CHECK(g.back().basis() == Mat::from_rows(f, {{0, 0, 1, 0}, {0, 0, 0, 1}}, 4));
    try {
        grassmannian(f, 20, 10, 1000);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("bisection counts") {
    CHECK(bisections(Field::of_order(2), 1).size() == 3);
    auto b32 = bisections(Field::of_order(3), 2);
    CHECK(b32.size() == 5265);
    CHECK(std::set<Bisection>(b32.begin(), b32.end()).size() == 5265);
    CHECK(bisection_count(3, 2) == 357120);
    CHECK(bisections(Field::of_order(2), 3).size() == 357120);
    CHECK(bisections(Field::of_order(4), 1).size() == 10);
}

TEST_CASE("intersection, sum and perp against vector sets") {
    std::mt19937_64 rng(21);
    for (std::uint64_t q : {2, 3, 4}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 40; ++t) {
            std::size_t n = 5;
            Subspace a = random_subspace(f, n, 1 + rng() % 4, rng);
            Subspace b = random_subspace(f, n, 1 + rng() % 4, rng);
            Subspace m = intersect(a, b);
            REQUIRE(m.dim() == brute_meet(a, b));
            REQUIRE(intersection_dim(a, b) == m.dim());
            CHECK(a.contains(m));
            CHECK(b.contains(m));
            CHECK(sum(a, b).dim() == a.dim() + b.dim() - m.dim());
            Subspace pa = perp(a);
            CHECK(pa.dim() == n - a.dim());
            CHECK(perp(pa) == a);
            Mat prod = a.basis() * transpose(pa.basis());
            for (auto x : prod.data()) CHECK(x == 0);
            Subspace c = complement(a);
            CHECK(c.dim() == n - a.dim());
            CHECK(intersection_dim(a, c) == 0);
        }
    }
    Subspace x(Field::of_order(2), 3), y(Field::of_order(2), 4);
    CHECK_THROWS_AS(sum(x, y), Error);
}

TEST_CASE("diagonal subspaces") {
    Field f = Field::of_order(2);
    Subspace y1 = Subspace::coordinate(f, 4, {0, 1}), y2 = Subspace::coordinate(f, 4, {2, 3});
    Subspace d = Subspace::span(f, 4, {vsum(4, {0, 2}), vsum(4, {1, 3})});
    CHECK(is_diagonal(d, y1, y2));
    CHECK_FALSE(is_diagonal(Subspace::coordinate(f, 4, {0}), y1, y2));
    Subspace y3 = Subspace::coordinate(f, 4, {0}), y4 = Subspace::coordinate(f, 4, {2});
    try {
        is_diagonal(d, y3, y4);
        FAIL("expected NotContained");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotContained);
    }
}

TEST_CASE("frames carry canonical pairs onto given pairs") {
    std::mt19937_64 rng(8);
    for (std::uint64_t q : {2, 3}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 30; ++t) {
            Subspace a = random_subspace(f, 6, 3, rng), b = random_subspace(f, 6, 3, rng);
            std::size_t meet = intersection_dim(a, b);
            Mat g = pair_frame(a, b);
            REQUIRE(rank(g) == 6);
            std::vector<std::size_t> m1, m2;
            for (std::size_t i = 0; i < 3; ++i) {
                m1.push_back(i);
                m2.push_back(3 - meet + i);
            }
            CHECK(Subspace::coordinate(f, 6, m1).apply(g) == a);
            CHECK(Subspace::coordinate(f, 6, m2).apply(g) == b);
        }
    }
}

TEST_CASE("text round trips") {
    Field f = Field::of_order(3);
    Subspace s = Subspace::span(f, 4, {{1, 2, 0, 1}, {0, 1, 1, 2}});
    std::istringstream in(to_text(s));
    CHECK(subspace_from_text(in) == s);
    Bisection b = Bisection::make(Subspace::coordinate(f, 4, {2, 3}), Subspace::coordinate(f, 4, {0, 1}));
    CHECK(b.first == Subspace::coordinate(f, 4, {2, 3}));  // row-major order puts 0010 first
    std::istringstream bin(to_text(b));
    CHECK(bisection_from_text(bin) == b);
    std::istringstream bad("3 2 4\n1 0 0 0\n2 0 0 0\n");
    CHECK_THROWS_AS(subspace_from_text(bad), Error);
    std::istringstream meet("2 1 2\n1 0\n\n2 1 2\n1 0\n");
    CHECK_THROWS_AS(bisection_from_text(meet), Error);
}

TEST_CASE("table lookups and permutations") {
    Field f = Field::of_order(2);
    SubspaceTable t(f, 4, 2);
    CHECK(t.size() == 35);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t.index_of(t.at(i)) == i);
    std::mt19937_64 rng(4);
    Mat g = random_invertible(f, 4, rng);
    auto perm = t.permutation(g);
    std::set<std::uint32_t> img(perm.begin(), perm.end());
    CHECK(img.size() == 35);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t.at(perm[i]) == t.at(i).apply(g));
    Field f3 = Field::of_order(3);
    SubspaceTable t3(f3, 4, 2);
    Mat g3 = random_invertible(f3, 4, rng);
    auto p3 = t3.permutation(g3);
    for (std::size_t i = 0; i < t3.size(); i += 7) CHECK(t3.at(p3[i]) == t3.at(i).apply(g3));
}
