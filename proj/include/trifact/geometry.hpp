#pragma once

// The two incidence families: m-spaces against k-spaces of V(n,q) meeting
// in dimension j, and m-spaces against bisections of V(2k,q) with a fixed
// intersection pattern {k1, k2}.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "trifact/subspace.hpp"

namespace trifact {

struct ProjParams {
    Field field;
    std::size_t n = 0, m = 0, k = 0, j = 0;

    // Throws BadParams unless 1 <= m,k < n and max(0, m+k-n) <= j <= min(m,k).
    static ProjParams make(std::uint64_t q, std::size_t n, std::size_t m, std::size_t k, std::size_t j);
    std::uint64_t q() const { return field.order(); }
    friend bool operator==(const ProjParams& a, const ProjParams& b) {
        return a.field == b.field && a.n == b.n && a.m == b.m && a.k == b.k && a.j == b.j;
    }
};

struct BisParams {
    Field field;
    std::size_t k = 0, m = 0, k1 = 0, k2 = 0;

    // Throws BadParams unless 1 <= m < 2k, max(0, m-k) <= k1 <= k2 <= k, k1 + k2 <= m.
    static BisParams make(std::uint64_t q, std::size_t k, std::size_t m, std::size_t k1, std::size_t k2);
    std::uint64_t q() const { return field.order(); }
    std::size_t n() const { return 2 * k; }
    friend bool operator==(const BisParams& a, const BisParams& b) {
        return a.field == b.field && a.k == b.k && a.m == b.m && a.k1 == b.k1 && a.k2 == b.k2;
    }
};

bool incident(const ProjParams& p, const Subspace& point, const Subspace& line);
// Pattern compared as a multiset.
bool incident(const BisParams& p, const Subspace& point, const Bisection& line);

struct Flag {
    Subspace point;
    Subspace line;
};

// U = <e1..em>, W = <e1..ej, e(m+1)..e(m+k-j)>.
Flag canonical_flag(const ProjParams& p);
// Coordinate bisection <e1..ek> | <e(k+1)..e(2k)>.
Bisection coordinate_bisection(const Field& f, std::size_t k);
// A point with pattern (k1, k2) against the coordinate bisection.
Subspace canonical_point(const BisParams& p);

ProjParams dual(const ProjParams& p);
BisParams dual(const BisParams& p);
Bisection perp(const Bisection& b);

// Point stabiliser inside line stabiliser (or the reverse): happens for
// j = m = k, where W = U.
bool coset_degenerate(const ProjParams& p);
void require_proper(const ProjParams& p);  // throws DegenerateGeometry

struct NondegeneracyReport {
    std::uint64_t points = 0;
    std::uint64_t lines = 0;
    std::uint64_t min_lines_per_point = 0;
    std::uint64_t min_points_per_line = 0;
    bool ok() const { return points >= 2 && lines >= 2 && min_lines_per_point > 0 && min_points_per_line > 0; }
};

// Enumerates points and lines; TooLarge when |points| * |lines| > budget.
NondegeneracyReport nondegeneracy_check(const ProjParams& p, std::uint64_t budget = 10'000'000);
NondegeneracyReport nondegeneracy_check(const BisParams& p, std::uint64_t budget = 10'000'000);

nlohmann::json to_json(const ProjParams& p);
nlohmann::json to_json(const BisParams& p);
ProjParams proj_from_json(const nlohmann::json& j);
BisParams bis_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Subspace& s);
nlohmann::json to_json(const Bisection& b);

}  // namespace trifact
