#pragma once

// Explicit constructions realising incidences. Every returned object is
// re-checked with subspace primitives before it leaves this module; a
// failed check throws CertificationFailed.

#include <optional>
#include <vector>

#include "trifact/geometry.hpp"

namespace trifact {

struct DiagonalPair {
    Subspace first;
    Subspace second;
};

// Two disjoint r-subspaces of Y1 + Y2, each meeting Y1 and Y2 trivially,
// built from the stored bases of y1, y2. NoSuchPair when q = 2 and the
// larger of the two has dimension 1.
DiagonalPair diagonal_pair(const Subspace& y1, const Subspace& y2, std::size_t r);

// 0-based elements. m1 = {0..m-1}, m2 = {m-t..2m-t-1}.
struct SetWitness {
    std::vector<std::size_t> common;                              // |.| = n-2m+2j
    std::optional<std::vector<std::size_t>> subset;               // k-subset of common
    std::optional<std::vector<std::vector<std::size_t>>> parts;   // partition of the rest
};

// Needs 1 <= m <= n/2, 2j <= k, admissible j, t < m.
SetWitness subset_witness(std::size_t n, std::size_t m, std::size_t k, std::size_t j, std::size_t t);

// m-spaces <e1..em> and <e(m-t+1)..e(2m-t)> of V(n).
struct CanonicalPair {
    Subspace first;
    Subspace second;
};
CanonicalPair canonical_pair(const Field& f, std::size_t n, std::size_t m, std::size_t t);

// A k-space j-incident with both members of the canonical pair at meet t.
Subspace theorem1_witness(const ProjParams& p, std::size_t t);

// A bisection incident (as a multiset pattern) with both members of the
// canonical pair of m-spaces of V(2k) at meet t.
Bisection bisection_witness(const BisParams& p, std::size_t t);

// The hard-coded q = 2 bisections for k in {2,3,4}, 1 <= t < k.
Bisection table_bisection(std::size_t k, std::size_t t);

// q^k + 1 pairwise-disjoint k-spaces of V(2k, q) from the line over GF(q^k).
std::vector<Subspace> desarguesian_spread(const Field& f, std::size_t k);

// A k-space disjoint from four pairwise-disjoint k-spaces of V(2k, q), q^k >= 4.
Subspace fifth_disjoint(const Subspace& a, const Subspace& b, const Subspace& c, const Subspace& d);

}  // namespace trifact
