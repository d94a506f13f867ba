#pragma once

// Matrix groups given by generators acting on subspaces, bisections and
// flags. Orbits come from breadth-first closure over index permutations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trifact/geometry.hpp"
#include "trifact/table.hpp"

namespace trifact {

struct GeneratorSet {
    std::vector<Mat> generators;
    std::string description;
};

// Diagonal primitive element (q > 2), one transvection, the n-cycle.
GeneratorSet gl_generators(std::size_t n, const Field& f);
// GL(k) x GL(k) on the two halves and the swap, moved onto b.
GeneratorSet bisection_stabiliser_generators(const Bisection& b);
// Levi factor GL(m) x GL(n-m) and one root element, moved onto u.
GeneratorSet subspace_stabiliser_generators(const Subspace& u);

// Order of the generated group by closure; TooLarge past `limit`.
std::uint64_t group_order(const GeneratorSet& g, std::uint64_t limit = 2'000'000);

struct OrbitReport {
    std::vector<std::uint64_t> lengths;              // ascending
    std::uint64_t total = 0;                         // sum of lengths
    std::vector<std::size_t> representatives;        // least member per orbit, orbits in rep order
    std::vector<std::uint32_t> orbit_of;             // per element; skipped element gets UINT32_MAX
    std::size_t count() const { return representatives.size(); }
};

// Orbits of the group generated by `perms` on {0..n-1}. The least element
// of an orbit is taken by order_key. `skip` drops one (fixed) element.
OrbitReport orbit_partition(std::size_t n, const std::vector<std::vector<std::uint32_t>>& perms,
                            const std::vector<std::uint64_t>& order_key, std::optional<std::size_t> skip = {});

// Position of each table element in Subspace order.
std::vector<std::uint64_t> subspace_order_key(const SubspaceTable& t);

OrbitReport orbits_on_subspaces(const GeneratorSet& g, const SubspaceTable& t);

struct BisectionOrbits {
    OrbitReport report;
    std::vector<Bisection> representatives;
};
BisectionOrbits orbits_on_bisections(const GeneratorSet& g, const BisectionIndex& idx,
                                     std::optional<std::size_t> skip = {});
// Stabiliser of the coordinate bisection on all other bisections of V(2k,q).
BisectionOrbits stabiliser_orbits(const Field& f, std::size_t k, std::uint64_t budget = 10'000'000);

// Orbits on j-incident (m-space, k-space) pairs.
OrbitReport orbits_on_flags(const GeneratorSet& g, const ProjParams& p, std::uint64_t budget = 10'000'000);

struct ParabolicOrbits {
    OrbitReport report;
    std::vector<std::size_t> meet_dim;  // per orbit, dim(rep cap <e1..em>)
    bool classes_match_meet = false;    // every orbit is one whole meet class
};
// Stabiliser of <e1..em> on Gr(n,k).
ParabolicOrbits pm_orbits_on_k_spaces(std::size_t n, std::size_t m, std::size_t k, const Field& f,
                                      std::uint64_t budget = 10'000'000);

// "24 64^2 72" style multisets.
std::string multiset_text(const std::vector<std::uint64_t>& sorted_values);
std::vector<std::uint64_t> parse_multiset(const std::string& text);
// Shipped expected multiset for the stabiliser orbits at (q,k), if any.
std::optional<std::vector<std::uint64_t>> golden_orbit_lengths(std::uint64_t q, std::size_t k,
                                                               const std::string& data_dir = TRIFACT_DATA_DIR);

}  // namespace trifact
