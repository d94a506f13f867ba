#include <set>

#include "doctest.h"
#include "support.hpp"
#include "trifact/counts.hpp"
#include "trifact/orbits.hpp"

using namespace trifact;
using namespace testsupport;

namespace {

BigInt gl_order(std::size_t n, std::uint64_t q) {
    BigInt qn = 1, r = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= q;
    BigInt qi = 1;
    for (std::size_t i = 0; i < n; ++i, qi *= q) r *= qn - qi;
    return r;
}

// Every element of the generated group, by closure on matrices.
std::vector<Mat> elements(const GeneratorSet& g) {
    std::vector<Mat> out{Mat::identity(g.generators[0].field(), g.generators[0].rows())};
    std::set<Mat> seen(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const Mat& s : g.generators) {
            Mat y = out[i] * s;
            if (seen.insert(y).second) out.push_back(y);
        }
    return out;
}

}  // namespace

TEST_CASE("GL generators generate GL") {
    Field f2 = Field::of_order(2);
    auto g1 = gl_generators(1, f2);
    CHECK(g1.generators.size() == 1);
    CHECK(g1.generators[0] == Mat::identity(f2, 1));
    CHECK(group_order(g1) == 1);
    CHECK(group_order(gl_generators(2, f2)) == 6);
    CHECK(group_order(gl_generators(2, Field::of_order(3))) == 48);
    for (std::uint64_t q : {2, 3, 4, 5})
        for (std::size_t n = 1; n <= 3; ++n) {
            if (q > 3 && n == 3) continue;
            Field f = Field::of_order(q);
            auto g = gl_generators(n, f);
            for (auto& x : g.generators) CHECK(rank(x) == n);
            CHECK(BigInt(group_order(g)) == gl_order(n, q));
            // transitive on 1-spaces
            CHECK(orbits_on_subspaces(g, SubspaceTable(f, n, 1)).count() == 1);
        }
    CHECK_THROWS_AS(group_order(gl_generators(4, Field::of_order(3)), 1000), Error);
}

TEST_CASE("stabiliser generators fix what they should") {
    std::mt19937_64 rng(9);
    for (std::uint64_t q : {2, 3}) {
        Field f = Field::of_order(q);
        for (std::size_t k = 1; k <= 3; ++k) {
            Subspace a = random_subspace(f, 2 * k, k, rng), b = random_subspace(f, 2 * k, k, rng);
            while (intersection_dim(a, b)) b = random_subspace(f, 2 * k, k, rng);
            Bisection bis = Bisection::make(a, b);
            for (auto& g : bisection_stabiliser_generators(bis).generators) CHECK(bis.apply(g) == bis);
            Subspace u = random_subspace(f, 4, 2, rng);
            for (auto& g : subspace_stabiliser_generators(u).generators) CHECK(u.apply(g) == u);
        }
    }
    CHECK(group_order(bisection_stabiliser_generators(coordinate_bisection(Field::of_order(2), 1))) == 2);
    CHECK(group_order(bisection_stabiliser_generators(coordinate_bisection(Field::of_order(3), 2))) == 4608);
    std::uint64_t k3 = group_order(bisection_stabiliser_generators(coordinate_bisection(Field::of_order(2), 3)));
    CHECK(k3 == 56448);
    // orbit-stabiliser: GL(6,2) is transitive on bisections
    CHECK(gl_order(6, 2) == BigInt(k3) * bisection_count(3, 2));
    // parabolic: q^{m(n-m)} |GL(m)| |GL(n-m)|
    Field f3 = Field::of_order(3);
    auto p = subspace_stabiliser_generators(Subspace::coordinate(f3, 3, {0}));
    CHECK(BigInt(group_order(p)) == BigInt(9) * gl_order(1, 3) * gl_order(2, 3));
}

TEST_CASE("small orbit partitions") {
    Field f2 = Field::of_order(2);
    auto r = orbits_on_subspaces(gl_generators(2, f2), SubspaceTable(f2, 2, 1));
    CHECK(r.lengths == std::vector<std::uint64_t>{3});
    auto k1 = stabiliser_orbits(f2, 1);
    CHECK(k1.report.lengths == std::vector<std::uint64_t>{2});
    CHECK(k1.report.total == 2);

    // (q,k) = (2,2) against orbits computed from the whole group
    auto fast = stabiliser_orbits(f2, 2);
    CHECK(fast.report.total + 1 == bisection_count(2, 2));
    Bisection b0 = coordinate_bisection(f2, 2);
    auto group = elements(bisection_stabiliser_generators(b0));
    CHECK(group.size() == 72);
    std::set<Bisection> left;
    for (auto& b : bisections(f2, 2))
        if (!(b == b0)) left.insert(b);
    std::vector<std::uint64_t> lengths;
    std::vector<Bisection> mins;
    while (!left.empty()) {
        Bisection s = *left.begin();
        std::set<Bisection> orbit;
        for (auto& g : group) orbit.insert(s.apply(g));
        for (auto& x : orbit) left.erase(x);
        lengths.push_back(orbit.size());
        mins.push_back(*orbit.begin());
        CHECK(72 % orbit.size() == 0);
    }
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == fast.report.lengths);
    CHECK(mins == fast.representatives);
}

TEST_CASE("the two golden computations") {
    auto g32 = golden_orbit_lengths(3, 2);
    auto g23 = golden_orbit_lengths(2, 3);
    REQUIRE(g32);
    REQUIRE(g23);
    CHECK(g32->size() == 15);
    CHECK(g23->size() == 33);
    auto r32 = stabiliser_orbits(Field::of_order(3), 2);
    CHECK(r32.report.lengths == *g32);
    CHECK(r32.report.total == 5264);
    CHECK(r32.report.total + 1 == bisection_count(2, 3));
    for (auto l : r32.report.lengths) CHECK(4608 % l == 0);
    CHECK(multiset_text(r32.report.lengths) == "24 64^2 72 96 144 192 288^2 384 576^3 768 1152");
    auto r23 = stabiliser_orbits(Field::of_order(2), 3);
    CHECK(r23.report.lengths == *g23);
    CHECK(r23.report.total == 357119);
    for (auto l : r23.report.lengths) CHECK(56448 % l == 0);
    // each representative lies in its own orbit and is least there
    const auto& idx = shared_bisections(Field::of_order(3), 2);
    std::vector<Bisection> least(r32.report.count(), idx.at(0));
    std::vector<bool> seen(r32.report.count(), false);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto o = r32.report.orbit_of[i];
        if (o == UINT32_MAX) continue;
        Bisection b = idx.at(i);
        if (!seen[o] || b < least[o]) least[o] = b;
        seen[o] = true;
    }
    CHECK(least == r32.representatives);
    CHECK(golden_orbit_lengths(5, 2) == std::nullopt);
}

TEST_CASE("orbit reports do not depend on generator order") {
    Field f3 = Field::of_order(3);
    auto g = bisection_stabiliser_generators(coordinate_bisection(f3, 2));
    auto rev = g;
    std::reverse(rev.generators.begin(), rev.generators.end());
    const auto& idx = shared_bisections(f3, 2);
    auto skip = idx.index_of(coordinate_bisection(f3, 2));
    auto a = orbits_on_bisections(g, idx, skip), b = orbits_on_bisections(rev, idx, skip);
    CHECK(a.report.lengths == b.report.lengths);
    CHECK(a.report.orbit_of == b.report.orbit_of);
    CHECK(a.representatives == b.representatives);
    // skipping a moved element is an error
    CHECK_THROWS_AS(orbits_on_bisections(g, idx, skip == 0 ? 1 : 0), Error);
}

TEST_CASE("GL is transitive on flags") {
    for (std::uint64_t q : {2, 3})
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t m = 1; m < n; ++m)
                for (std::size_t k = 1; k < n; ++k)
                    for (std::size_t j = (m + k > n ? m + k - n : 0); j <= std::min(m, k); ++j) {
                        if (q == 3 && n == 4) continue;
                        auto p = ProjParams::make(q, n, m, k, j);
                        CHECK(orbits_on_flags(gl_generators(n, p.field), p).count() == 1);
                    }
}

TEST_CASE("parabolic orbits are the meet classes") {
    Field f2 = Field::of_order(2), f3 = Field::of_order(3);
    CHECK(pm_orbits_on_k_spaces(3, 1, 2, f2).report.count() == 2);
    CHECK(pm_orbits_on_k_spaces(4, 2, 2, f2).report.count() == 3);
    CHECK(pm_orbits_on_k_spaces(2, 1, 1, f3).report.count() == 2);
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t m = 1; m < n; ++m)
            for (std::size_t k = 1; k < n; ++k) {
                auto r = pm_orbits_on_k_spaces(n, m, k, f2);
                std::size_t lo = m + k > n ? m + k - n : 0;
                CHECK(r.report.count() == std::min(m, k) - lo + 1);
                CHECK(r.classes_match_meet);
                CHECK(r.report.total == gaussian_u64(n, k, 2));
            }
}

TEST_CASE("multiset text") {
    CHECK(multiset_text({1, 2, 2, 5, 5, 5}) == "1 2^2 5^3");
    CHECK(multiset_text({}) == "");
    CHECK(parse_multiset("5^3 1 2^2") == std::vector<std::uint64_t>{1, 2, 2, 5, 5, 5});
    CHECK_THROWS_AS(parse_multiset("3^x"), Error);
    CHECK_THROWS_AS(parse_multiset("3^0"), Error);
    CHECK_THROWS_AS(parse_multiset("abc"), Error);
}
