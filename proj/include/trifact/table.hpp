#pragma once

// Materialised Gr(n,k) with a key index and, when q^n is small enough,
// a bitmap of nonzero vectors per element for batched intersection tests.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trifact/subspace.hpp"

namespace trifact {

// Bitmap of the nonzero vectors of s, indexed by sum v_i q^i.
std::vector<std::uint64_t> vector_bitmap(const Subspace& s);

class SubspaceTable {
public:
    static constexpr std::uint64_t kBitmapLimit = 1ULL << 16;  // max q^n with bitmaps

    SubspaceTable(const Field& f, std::size_t n, std::size_t k, std::uint64_t budget = 10'000'000);

    const Field& field() const { return field_; }
    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return k_; }
    std::size_t size() const { return elems_.size(); }
    const Subspace& at(std::size_t i) const { return elems_[i]; }
    const std::vector<Subspace>& elements() const { return elems_; }
    std::optional<std::size_t> find(const Subspace& s) const;
    std::size_t index_of(const Subspace& s) const;  // throws NotFound

    bool has_bitmaps() const { return words_ != 0; }
    // dim(query cap at(i)) for every i.
    std::vector<std::uint8_t> intersection_dims(const Subspace& query) const;
    // perm[i] = index of at(i) g.
    std::vector<std::uint32_t> permutation(const Mat& g) const;

private:
    Field field_;
    std::size_t n_, k_;
    std::vector<Subspace> elems_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint8_t> dim_of_count_;  // popcount + 1 = q^d
};

// Process-wide cache keyed by (q, n, k). Entries live until exit.
const SubspaceTable& shared_table(const Field& f, std::size_t n, std::size_t k,
                                  std::uint64_t budget = 10'000'000);

// Bisections of V(2k,q) as index pairs (a < b) into the k-space table,
// sorted. Built from the table's own intersection counts.
class BisectionIndex {
public:
    BisectionIndex(const Field& f, std::size_t k, std::uint64_t budget = 10'000'000);

    const SubspaceTable& halves() const { return *halves_; }
    std::size_t size() const { return pairs_.size(); }
    std::pair<std::uint32_t, std::uint32_t> pair(std::size_t i) const { return pairs_[i]; }
    Bisection at(std::size_t i) const;
    std::optional<std::size_t> find(std::uint32_t a, std::uint32_t b) const;
    std::size_t index_of(const Bisection& b) const;  // throws NotFound

private:
    const SubspaceTable* halves_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

const BisectionIndex& shared_bisections(const Field& f, std::size_t k, std::uint64_t budget = 10'000'000);

}  // namespace trifact
