#pragma once

// Subspaces of V(n,q) held by their reduced echelon basis, plus the
// Grassmannian and bisection enumerators.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "trifact/gfq.hpp"

namespace trifact {

class Subspace {
public:
    Subspace(Field f, std::size_t n);  // zero subspace
    static Subspace span(const Mat& generators);
    static Subspace span(const Field& f, std::size_t n, const std::vector<Vec>& generators);
    static Subspace coordinate(const Field& f, std::size_t n, const std::vector<std::size_t>& idx);
    static Subspace whole(const Field& f, std::size_t n);
    // Trusts that m is already in reduced echelon form with no zero rows.
    static Subspace from_rref(Mat m);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& w) const;
    // Image under v -> v g.
    Subspace apply(const Mat& g) const;
    std::string key() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.basis_ <=> b.basis_;
    }

private:
    explicit Subspace(Mat basis, std::size_t n) : basis_(std::move(basis)), n_(n) {}
    Mat basis_;
    std::size_t n_;
};

void check_same_ambient(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);
Subspace perp(const Subspace& a);
// Coordinate complement on the non-pivot columns.
Subspace complement(const Subspace& a);
// u cap y1 = u cap y2 = 0. Throws NotContained unless u <= y1 + y2.
bool is_diagonal(const Subspace& u, const Subspace& y1, const Subspace& y2);

// Unordered pair {first, second} of complementary k-spaces of V(2k,q),
// stored with first < second.
struct Bisection {
    Subspace first;
    Subspace second;

    static Bisection make(const Subspace& a, const Subspace& b);
    Bisection apply(const Mat& g) const { return make(first.apply(g), second.apply(g)); }
    friend bool operator==(const Bisection&, const Bisection&) = default;
    friend std::strong_ordering operator<=>(const Bisection& a, const Bisection& b) {
        if (auto c = a.first <=> b.first; c != 0) return c;
        return a.second <=> b.second;
    }
};

// Number of m-subspaces of V(n,q), saturating at UINT64_MAX.
std::uint64_t gaussian_u64(std::size_t n, std::size_t m, std::uint64_t q);

// Reduced echelon bases of Gr(n,m) in order: pivot sets lexicographically,
// then free entries lexicographically (row-major, last entry fastest).
class Grassmannian {
public:
    Grassmannian(Field f, std::size_t n, std::size_t m);
    // Advances; false once exhausted.
    bool next(Mat& out);

private:
    bool next_pivots();
    void setup_free();
    Field f_;
    std::size_t n_, m_;
    std::vector<std::size_t> piv_;
    std::vector<std::pair<std::size_t, std::size_t>> free_;
    std::vector<Elem> vals_;
    bool started_ = false, done_ = false;
};

std::vector<Subspace> grassmannian(const Field& f, std::size_t n, std::size_t m,
                                   std::uint64_t budget = 10'000'000);
void for_each_subspace(const Field& f, std::size_t n, std::size_t m,
                       const std::function<void(const Subspace&)>& fn);

// All complements of u, as graphs of maps from its coordinate complement.
void for_each_complement(const Subspace& u, const std::function<void(const Subspace&)>& fn);

std::uint64_t bisection_count(std::size_t k, std::uint64_t q);
std::vector<Bisection> bisections(const Field& f, std::size_t k, std::uint64_t budget = 10'000'000);

// Extends the independent rows of `rows` to a basis using rows of `pool`
// (greedily, in order). Returns only the added rows.
Mat extend_rows(const Mat& rows, const Mat& pool);
// g with canonical pair <e1..em>, <e(m-t+1)..e(2m-t)> mapped onto (a, b) by v -> v g.
Mat pair_frame(const Subspace& a, const Subspace& b);
// g with <e1..ek>, <e(k+1)..e(2k)> mapped onto (b.first, b.second).
Mat bisection_frame(const Subspace& first, const Subspace& second);

std::string to_text(const Subspace& s);
Subspace subspace_from_text(std::istream& in);
std::string to_text(const Bisection& b);
Bisection bisection_from_text(std::istream& in);

}  // namespace trifact
