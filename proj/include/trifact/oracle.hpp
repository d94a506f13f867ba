#pragma once

// Brute-force completeness checks. Point pairs are reduced to one
// canonical pair per meet dimension t; line pairs either to a fixed first
// bisection (the group is transitive on bisections) or to supplied
// orbit representatives.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trifact/geometry.hpp"

namespace trifact {

struct OracleOptions {
    std::uint64_t budget = 50'000'000;
    unsigned threads = 1;
};

enum class Method { Predicate, Oracle, Witness };
const char* method_name(Method m);

struct CompletenessVerdict {
    bool complete = false;
    Method method = Method::Oracle;
    std::size_t cases = 0;  // representative pairs examined
    std::optional<std::size_t> failing_t;
    std::optional<std::pair<Subspace, Subspace>> failing_points;
    std::optional<std::pair<Bisection, Bisection>> failing_lines;
};

nlohmann::json to_json(const CompletenessVerdict& v);

// Searches Gr(n,k) for a common j-incident line of each canonical pair.
CompletenessVerdict collinear_oracle_proj(const ProjParams& p, const OracleOptions& opt = {});
// Per t, builds theorem1_witness. PredicateFails propagates.
CompletenessVerdict collinear_witness_proj(const ProjParams& p);

enum class BisSearch { WitnessFirst, SearchOnly };
// WitnessFirst builds a certified witness per t and falls back to search
// only when none is available. The search alone decides incompleteness.
CompletenessVerdict collinear_oracle_bis(const BisParams& p, BisSearch mode = BisSearch::WitnessFirst,
                                         const OracleOptions& opt = {});

// An m-space incident with both bisections, if any.
std::optional<Subspace> common_point(const BisParams& p, const Bisection& a, const Bisection& b,
                                     std::uint64_t budget = 50'000'000);

// Fixes the coordinate bisection and runs over every other one.
CompletenessVerdict concurrent_oracle(const BisParams& p, const OracleOptions& opt = {});
// Only the given pairs are checked; the caller vouches that they cover
// every orbit on pairs of distinct bisections.
CompletenessVerdict concurrent_oracle(const BisParams& p, const std::vector<std::pair<Bisection, Bisection>>& reps,
                                      const OracleOptions& opt = {});
// Every bisection sharing no point with the coordinate bisection.
std::vector<Bisection> concurrent_failures(const BisParams& p, const OracleOptions& opt = {});

// Four k-spaces a1, a2, b1, b2 of V(2k,q), a1 cap a2 = b1 cap b2 = 0.
struct FourSpaceResult {
    std::optional<Subspace> common_complement;  // meets all four trivially
    enum class Route { Search, Fifth, Quotient } route = Route::Search;
    std::size_t attempts = 0;  // lifted (k-1)-spaces tried on the quotient route
};
// Levels up to base_level are searched directly. Above it, pairwise
// disjoint inputs go to fifth_disjoint and the rest are reduced through a
// hyperplane and a quotient by a line in a cross intersection; when a
// lifted (k-1)-space has no usable extension the next one is tried. With
// force_step the top level always takes the reduction route.
FourSpaceResult disjoint_from_four(const Subspace& a1, const Subspace& a2, const Subspace& b1, const Subspace& b2,
                                   std::size_t base_level, bool force_step = false);

// Smallest k at which (0,0) concurrent completeness is settled by search:
// 1 for q >= 4, 2 for q = 3, 3 for q = 2.
std::size_t concurrent_base_level(std::uint64_t q);

struct InductionReport {
    std::size_t tested = 0, via_fifth = 0, via_quotient = 0, failures = 0;
    std::size_t retried = 0;  // quotient cases whose first lifted space failed
    bool ok() const { return tested > 0 && failures == 0; }
};

// Runs the level-k reduction on sampled pairs of bisections of V(2k,q):
// a third pairwise disjoint (from a spread), a third with a forced cross
// intersection, the rest uniform. BaseCaseMissing when level k-1 is below
// the settled base, unless allow_unproven_base.
InductionReport induction_step_check(std::size_t k, std::uint64_t q, std::size_t samples = 60,
                                     std::uint64_t seed = 1, bool allow_unproven_base = false);

// Subsets of {0..n-1}: for each t < m, some k-set meets {0..m-1} and
// {m-t..2m-t-1} in exactly j elements. TooLarge for n > 14.
bool subset_geometry_oracle(std::size_t n, std::size_t m, std::size_t k, std::size_t j);

}  // namespace trifact
