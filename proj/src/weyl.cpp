#include "trifact/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "trifact/error.hpp"
#include "trifact/oracle.hpp"

namespace trifact {

SubsetGeom SubsetGeom::make(std::size_t n, std::size_t m, std::size_t k, std::size_t j) {
    if (m < 1 || 2 * m > n || k < 1 || k >= n) throw Error(Errc::BadParams, "need 1 <= m <= n/2 and 1 <= k < n");
    if (j > std::min(m, k) || j + n < m + k) throw Error(Errc::BadParams, "j outside the admissible range");
    return SubsetGeom{n, m, k, j};
}

namespace {

std::uint64_t block_mask(std::size_t n, const std::vector<std::size_t>& block) {
    if (n > 63) throw Error(Errc::TooLarge, "n too large for subset masks");
    std::uint64_t mask = 0;
    for (auto x : block) {
        if (x < 1 || x > n) throw Error(Errc::BadSubsets, "element outside {1..n}");
        const std::uint64_t bit = 1ULL << (x - 1);
        if (mask & bit) throw Error(Errc::BadSubsets, "repeated element");
        mask |= bit;
    }
    if (block.empty() || block.size() == n) throw Error(Errc::BadSubsets, "block must be nonempty and proper");
    return mask;
}

}  // namespace

std::uint64_t young_orbit_count(std::size_t n, const std::vector<std::size_t>& block, std::size_t k) {
    if (n > 20) throw Error(Errc::TooLarge, "subset closure limited to n <= 20");
    const std::uint64_t mask = block_mask(n, block);
    if (k > n) throw Error(Errc::BadParams, "k exceeds n");
    // transpositions of consecutive elements inside the block and inside its complement
    std::vector<std::pair<unsigned, unsigned>> swaps;
    for (int side = 0; side < 2; ++side) {
        int prev = -1;
        for (unsigned i = 0; i < n; ++i) {
            if (((mask >> i) & 1) != static_cast<unsigned>(side == 0)) continue;
            if (prev >= 0) swaps.emplace_back(static_cast<unsigned>(prev), i);
            prev = static_cast<int>(i);
        }
    }
    std::vector<char> seen(std::size_t{1} << n, 0);
    std::uint64_t orbits = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (seen[s] || static_cast<std::size_t>(__builtin_popcount(s)) != k) continue;
        ++orbits;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            for (auto [a, b] : swaps) {
                std::uint32_t y = x;
                if (((x >> a) & 1) != ((x >> b) & 1)) y ^= (1u << a) | (1u << b);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return orbits;
}

std::uint64_t double_coset_count(std::size_t n, const std::vector<std::size_t>& block_m,
                                 const std::vector<std::size_t>& block_k) {
    block_mask(n, block_m);
    block_mask(n, block_k);
    const std::size_t m = block_m.size(), k = block_k.size();
    const std::size_t lo = m + k > n ? m + k - n : 0;
    const std::uint64_t count = std::min(m, k) - lo + 1;
    if (n <= 10 && young_orbit_count(n, block_m, k) != count)
        throw Error(Errc::CertificationFailed, "double coset count disagrees with orbit count");
    return count;
}

bool weyl_triple_by_cosets(std::size_t n, std::size_t m, std::size_t k, std::size_t j) {
    SubsetGeom::make(n, m, k, j);
    if (n > 8) throw Error(Errc::TooLarge, "coset route limited to n <= 8");
    // M = {0..m-1}; K = {0..j-1} + {m..m+k-j-1}
    std::vector<std::size_t> inside, outside;
    for (std::size_t i = 0; i < n; ++i) {
        bool in_k = i < j || (i >= m && i < m + k - j);
        (in_k ? inside : outside).push_back(i);
    }
    std::set<std::size_t> meets;
    std::vector<std::size_t> a = inside, image(n);
    do {
        std::vector<std::size_t> b = outside;
        do {
            for (std::size_t i = 0; i < a.size(); ++i) image[inside[i]] = a[i];
            for (std::size_t i = 0; i < b.size(); ++i) image[outside[i]] = b[i];
            std::size_t t = 0;
            for (std::size_t i = 0; i < m; ++i) t += image[i] < m;
            meets.insert(t);
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
    // double cosets W_M g W_M are indexed by |M cap M^g| in [max(0,2m-n), m]
    for (std::size_t t = 2 * m > n ? 2 * m - n : 0; t <= m; ++t)
        if (!meets.count(t)) return false;
    return true;
}

bool weyl_triple_check(std::size_t n, std::size_t m, std::size_t k, std::size_t j) {
    SubsetGeom::make(n, m, k, j);
    if (n <= 8) return weyl_triple_by_cosets(n, m, k, j);
    return subset_geometry_oracle(n, m, k, j);
}

}  // namespace trifact
