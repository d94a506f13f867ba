#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "trifact/gf2.hpp"
#include "trifact/gfq.hpp"

using namespace trifact;
using namespace testsupport;

namespace {

using Poly = std::vector<std::uint64_t>;

// remainder of a by monic b over GF(p), schoolbook
Poly rem(Poly a, const Poly& b, std::uint64_t p) {
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back();
        std::size_t s = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = (a[s + i] + p * p - c * b[i]) % p;
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly monic_from_code(std::uint64_t code, unsigned deg, std::uint64_t p) {
    Poly f(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        f[i] = code % p;
        code /= p;
    }
    f[deg] = 1;
    return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

bool irreducible_by_trial(const Poly& f, std::uint64_t p) {
    unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d)
        for (std::uint64_t c = 0; c < ipow(p, d); ++c)
            if (rem(f, monic_from_code(c, d, p), p).empty()) return false;
    return true;
}

void check_axioms_exhaustive(const Field& f) {
    const Elem q = f.order();
    for (Elem a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a) CHECK(f.mul(a, f.inv(a)) == 1);
        for (Elem b = 0; b < q; ++b) {
            REQUIRE(f.add(a, b) == f.add(b, a));
            REQUIRE(f.mul(a, b) == f.mul(b, a));
            for (Elem c = 0; c < q; ++c) {
                REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                REQUIRE(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
            }
        }
    }
}

void check_axioms_random(const Field& f, int trials) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Elem> d(0, f.order() - 1);
    for (int i = 0; i < trials; ++i) {
        Elem a = d(rng), b = d(rng), c = d(rng);
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        REQUIRE(f.sub(f.add(a, b), b) == a);
        if (a) REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
    // Fermat: a^(q-1) = 1
    for (int i = 0; i < 20; ++i) {
        Elem a = d(rng);
        if (a) CHECK(f.pow(a, f.order() - 1) == 1);
    }
}

}  // namespace

TEST_CASE("small moduli are the least irreducibles") {
    CHECK(Field::make(2, 2).modulus() == Poly{1, 1, 1});
    CHECK(Field::make(2, 3).modulus() == Poly{1, 1, 0, 1});
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}}) {
        Field f = Field::make(p, e);
        CHECK(irreducible_by_trial(f.modulus(), p));
        std::uint64_t code = 0;
        for (unsigned i = e; i-- > 0;) code = code * p + f.modulus()[i];
        for (std::uint64_t c = 0; c < code; ++c) CHECK_FALSE(irreducible_by_trial(monic_from_code(c, e, p), p));
    }
}

TEST_CASE("Rabin test agrees with trial division") {
    for (std::uint64_t p : {2, 3, 5})
        for (unsigned d = 1; d <= 4; ++d)
            for (std::uint64_t c = 0; c < ipow(p, d); ++c) {
                Poly f = monic_from_code(c, d, p);
                REQUIRE(is_irreducible_mod_p(f, p) == irreducible_by_trial(f, p));
            }
}

TEST_CASE("field axioms, small orders exhaustively") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) check_axioms_exhaustive(Field::of_order(q));
}

TEST_CASE("field axioms on the large-order code paths") {
    check_axioms_random(Field::make(2, 10), 2000);   // log tables
    check_axioms_random(Field::make(3, 7), 2000);    // log tables, odd characteristic
    check_axioms_random(Field::make(2, 20), 500);    // polynomial arithmetic
    check_axioms_random(Field::make(65537, 1), 2000);
    check_axioms_random(Field::make((1ULL << 61) - 1, 1), 2000);
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(Field::make(4, 2), Error);
    try {
        Field::make(4, 2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
    try {
        Field::make(2, 0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeZero);
    }
    try {
        Field::of_order(12);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
    CHECK(is_prime((1ULL << 61) - 1));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("primitive element generates the multiplicative group") {
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 16, 25}) {
        Field f = Field::of_order(q);
        Elem g = f.primitive();
        std::set<Elem> seen;
        Elem x = 1;
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            seen.insert(x);
            x = f.mul(x, g);
        }
        CHECK(seen.size() == q - 1);
    }
}

TEST_CASE("rref is canonical for the row space") {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 50; ++t) {
            Mat m = random_mat(f, 3, 6, rng);
            Mat p = random_invertible(f, 3, rng);
            Rref a = rref(m), b = rref(p * m);
            REQUIRE(a.reduced == b.reduced);
            REQUIRE(a.pivots == b.pivots);
            // rank from vector count
            CHECK(dim_from_size(vector_set(m).size(), q) == a.rank());
        }
    }
}

TEST_CASE("kernel and inverse") {
    std::mt19937_64 rng(3);
    for (std::uint64_t q : {2, 3, 4}) {
        Field f = Field::of_order(q);
        for (int t = 0; t < 30; ++t) {
            Mat m = random_mat(f, 3, 5, rng);
            Mat k = kernel(m);
            CHECK(k.rows() + rank(m) == 5);
            Mat prod = m * transpose(k);
            for (auto x : prod.data()) CHECK(x == 0);
            Mat g = random_invertible(f, 4, rng);
            CHECK(g * inverse(g) == Mat::identity(f, 4));
        }
    }
    Field f2 = Field::make(2, 1);
    Mat s = Mat::from_rows(f2, {{1, 1}, {1, 1}}, 2);
    try {
        inverse(s);
        FAIL("expected Singular");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Singular);
    }
}

TEST_CASE("matrix order and text round trip") {
    Field f = Field::of_order(3);
    Mat a = Mat::from_rows(f, {{1, 0, 2}, {0, 1, 1}}, 3);
    Mat b = Mat::from_rows(f, {{1, 0, 2}, {0, 2, 0}}, 3);
    CHECK(a < b);
    std::string txt = to_text(a);
    CHECK(txt == "3 2 3\n1 0 2\n0 1 1\n");
    CHECK(mat_from_text(txt) == a);
    CHECK_THROWS_AS(mat_from_text(std::string("3 1 2\n1 5\n")), Error);
    CHECK_THROWS_AS(mat_from_text(std::string("3 2 2\n1 1\n")), Error);
}

TEST_CASE("packed GF(2) matrices match the generic path") {
    std::mt19937_64 rng(5);
    Field f = Field::make(2, 1);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 12;
        Mat m = random_mat(f, r, c, rng);
        Gf2Mat p = Gf2Mat::from_mat(m);
        REQUIRE(p.to_mat() == m);
        gf2_rref(p);
        REQUIRE(p.to_mat() == rref(m).reduced);
    }
    Mat wide(f, 1, 64);
    wide(0, 63) = 1;
    CHECK(Gf2Mat::from_mat(wide).rows[0] == (1ULL << 63));
}
