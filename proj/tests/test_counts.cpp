#include "doctest.h"
#include "support.hpp"
#include "trifact/counts.hpp"

using namespace trifact;
using namespace testsupport;

namespace {

Rat r(long a, long b) { return Rat(a, b); }

}  // namespace

TEST_CASE("Gaussian binomials") {
    CHECK(gaussian(4, 2, 3) == 130);
    CHECK(gaussian(6, 3, 2) == 1395);
    CHECK(gaussian(7, 0, 5) == 1);
    CHECK(gaussian(3, 4, 2) == 0);
    for (std::uint64_t q : {2, 3, 4})
        for (std::size_t n = 0; n <= 5; ++n)
            for (std::size_t m = 0; m <= n; ++m) {
                CHECK(gaussian(n, m, q) == gaussian(n, n - m, q));
                if (n <= 4) CHECK(gaussian(n, m, q) == grassmannian(Field::of_order(q), n, m).size());
            }
    // far beyond 64 bits
    CHECK(gaussian(40, 20, 2) > BigInt(1) << 300);
}

TEST_CASE("F and H values") {
    CHECK(f_value(1, 1, 2) == r(1, 2));
    CHECK(f_value(1, 2, 2) == r(3, 8));
    CHECK(f_value(2, 3, 3) == r(208, 243));
    CHECK(h_value(1, 2, 3) == r(24, 65));
    CHECK(h_value(1, 2, 4) == r(60, 119));
    CHECK(h_value(2, 2, 2) == r(3, 5));
    for (long q = 2; q <= 7; ++q) {
        Rat closed(q * (q - 1) * (q - 1) * (q + 1), (q * q + 1) * (q * q + q + 1));
        CHECK(h_value(1, 2, q) == closed);
        CHECK((h_value(1, 2, q) > r(1, 2)) == (q >= 4));
        for (std::size_t k = 1; k <= 4; ++k) {
            long qk = 1;
            for (std::size_t i = 0; i < k; ++i) qk *= q;
            CHECK(h_value(k, k, q) == 1 - r(2, qk + 1));
        }
    }
    CHECK_THROWS_AS(f_value(0, 2, 2), Error);
    CHECK_THROWS_AS(f_value(3, 2, 2), Error);
    CHECK_THROWS_AS(h_value(3, 2, 2), Error);
}

TEST_CASE("H as a ratio of F products, and monotone") {
    for (std::uint64_t q : {2, 3, 4, 5})
        for (std::size_t k = 1; k <= 6; ++k)
            for (std::size_t a = 1; a <= k; ++a) {
                Rat f = f_value(a, k, q);
                CHECK(h_value(a, k, q) == f * f / f_value(k + a, 2 * k, q));
                if (a < k) CHECK(h_value(a, k, q) < h_value(a + 1, k, q));
                if (q < 5) CHECK(h_value(a, k, q) < h_value(a, k, q + 1));
            }
}

TEST_CASE("restricted movement thresholds") {
    CHECK(restricted_movement_sufficient(1, 1, 4));
    CHECK_FALSE(restricted_movement_sufficient(2, 2, 3));
    CHECK(restricted_movement_sufficient(1, 2, 2));
    CHECK_FALSE(restricted_movement_sufficient(1, 1, 3));
    CHECK_THROWS_AS(restricted_movement_sufficient(3, 2, 2), Error);
}

TEST_CASE("lower bound on H") {
    CHECK(h_lower_bound(2, 2, 2) == r(-1, 3));
    CHECK(h_lower_bound(3, 4, 2) > 0);
    CHECK(h_lower_bound(3, 4, 2) < h_value(3, 4, 2));
    for (std::uint64_t q = 2; q <= 5; ++q)
        for (std::size_t k = 2; k <= 8; ++k)
            for (std::size_t a = 2; a <= k; ++a) {
                CHECK(h_lower_bound(a, k, q) < h_value(a, k, q));
                Rat qi = 1;
                for (std::size_t i = a; i <= k; ++i) {
                    qi = Rat(1);
                    for (std::size_t e = 0; e < i; ++e) qi /= q;
                    CHECK(h_factor(i, k, q) > 1 - 2 * qi);
                }
            }
    CHECK_THROWS_AS(h_lower_bound(1, 3, 2), Error);
}

TEST_CASE("disjoint counts match the F ratio") {
    auto c = disjoint_count(1, 1, 2);
    CHECK(c.disjoint == 1);
    CHECK(c.total == 3);
    c = disjoint_count(1, 1, 3);
    CHECK(c.disjoint == 2);
    CHECK(c.ratio() == r(1, 2));
    c = disjoint_count(2, 2, 2);
    CHECK(c.disjoint == 6);
    CHECK(c.total == 35);
    CHECK(c.ratio() == r(6, 35));
    // independent count by vector sets
    Field f = Field::of_order(2);
    std::size_t brute = 0;
    Subspace lo = Subspace::coordinate(f, 4, {0, 1}), hi = Subspace::coordinate(f, 4, {2, 3});
    for (auto& s : grassmannian(f, 4, 2)) brute += brute_meet(s, lo) == 0 && brute_meet(s, hi) == 0;
    CHECK(brute == 6);
    for (auto [q, k] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}})
        for (std::size_t m = 1; m <= k; ++m) CHECK(disjoint_count_identity_check(m, k, q));
    CHECK_THROWS_AS(disjoint_count(4, 8, 2, 1000), Error);
}

TEST_CASE("rational text") {
    CHECK(to_text(r(24, 65)) == "24/65");
    CHECK(to_text(Rat(3)) == "3");
    CHECK(to_decimal(r(24, 65), 4) == "0.3692");
    CHECK(to_decimal(r(-1, 3), 3) == "-0.333");
    CHECK(to_decimal(r(1, 2), 0) == "1");
}
