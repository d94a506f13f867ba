#pragma once

// Symmetric-group counterparts: Young subgroups (setwise stabilisers),
// their double cosets, and triple factorisations of S_n.

#include <cstdint>
#include <vector>

namespace trifact {

struct SubsetGeom {
    std::size_t n = 0, m = 0, k = 0, j = 0;
    // Throws BadParams unless 1 <= m <= n/2, 1 <= k < n, j admissible.
    static SubsetGeom make(std::size_t n, std::size_t m, std::size_t k, std::size_t j);
};

// Blocks are subsets of {1..n}; BadSubsets when empty, full, out of range
// or repeating. Counts W_M \ S_n / W_K by the feasible |K' cap M|; for
// n <= 10 it is cross-checked against orbit counting.
std::uint64_t double_coset_count(std::size_t n, const std::vector<std::size_t>& block_m,
                                 const std::vector<std::size_t>& block_k);

// Orbits of the stabiliser of `block` on k-subsets of {1..n}, by closure
// under transpositions. TooLarge for n > 20.
std::uint64_t young_orbit_count(std::size_t n, const std::vector<std::size_t>& block, std::size_t k);

// S_n = W_M W_K W_M with |M| = m, |K| = k, |M cap K| = j. Decided by
// double cosets for n <= 8 and by subset search above.
bool weyl_triple_check(std::size_t n, std::size_t m, std::size_t k, std::size_t j);
// The n <= 8 route on its own: each W_M double coset meets W_K.
bool weyl_triple_by_cosets(std::size_t n, std::size_t m, std::size_t k, std::size_t j);

}  // namespace trifact
