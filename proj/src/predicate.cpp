#include "trifact/predicate.hpp"

namespace trifact {

const char* resolution_name(Resolution r) {
    switch (r) {
        case Resolution::Complete: return "complete";
        case Resolution::Incomplete: return "incomplete";
        case Resolution::Unresolved: return "unresolved";
    }
    return "unknown";
}

bool thm1_predicate(const ProjParams& p) {
    const std::size_t lo = p.m + p.k > p.n ? p.m + p.k - p.n : 0;
    const std::size_t slack = 2 * p.m > p.n ? 2 * p.m - p.n : 0;
    return lo <= p.j && 2 * p.j <= p.k + slack;
}

bool thm2_predicate(const BisParams& p) {
    if (p.q() == 2 && p.m == 1 && p.k == 1 && p.k1 == 0 && p.k2 == 0) return false;
    return 3 * p.k2 <= p.k + 1 + p.m + p.k1;
}

Resolution thm3_predicate(const BisParams& p) {
    if (p.m > p.k) return thm3_predicate(dual(p));
    const std::uint64_t q = p.q();
    if (2 * p.k2 > p.m)
        return q == 2 && p.k == 1 ? Resolution::Complete : Resolution::Incomplete;
    if (p.k1 == 0 && p.k2 == 0) {
        bool bad = (q == 2 && p.k == 1) || (q == 3 && p.k == 1) || (q == 2 && p.m == 2 && p.k == 2);
        return bad ? Resolution::Incomplete : Resolution::Complete;
    }
    return Resolution::Unresolved;
}

bool subset_condition(std::size_t n, std::size_t m, std::size_t k, std::size_t j) {
    return 2 * j <= k && k - 2 * j + 2 * m <= n;
}

}  // namespace trifact
