#pragma once

// Closed-form completeness conditions. Integer arithmetic only.

#include <cstdint>

#include "trifact/geometry.hpp"

namespace trifact {

enum class Resolution { Complete, Incomplete, Unresolved };

const char* resolution_name(Resolution r);

// Collinear completeness of m-spaces against k-spaces with j-dimensional meet:
// max(0, m+k-n) <= j and 2j <= k + max(0, 2m-n).
bool thm1_predicate(const ProjParams& p);

// Collinear completeness of the subspace-bisection family:
// 3 k2 <= k + 1 + m + k1, except (q,m,k,k1,k2) = (2,1,1,0,0).
bool thm2_predicate(const BisParams& p);

// Concurrent completeness where it is decided; Unresolved for
// 0 < k2 <= m/2 outside (0,0). Parameters with m > k are dualized first.
Resolution thm3_predicate(const BisParams& p);

// For subsets of an n-set: 0 <= k - 2j <= n - 2m.
bool subset_condition(std::size_t n, std::size_t m, std::size_t k, std::size_t j);

}  // namespace trifact
