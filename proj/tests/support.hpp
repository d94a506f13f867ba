#pragma once

#include <random>
#include <set>
#include <vector>

#include "trifact/gfq.hpp"
#include "trifact/subspace.hpp"

namespace testsupport {

using namespace trifact;

inline Mat random_mat(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Mat m(f, r, c);
    std::uniform_int_distribution<Elem> d(0, f.order() - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

inline Mat random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Mat m = random_mat(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

inline Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
    for (;;) {
        Subspace s = Subspace::span(random_mat(f, k, n, rng));
        if (s.dim() == k) return s;
    }
}

// All vectors of a subspace, as base-q codes. Independent of rref.
inline std::set<std::uint64_t> vector_set(const Mat& gens) {
    const Field& f = gens.field();
    const std::uint64_t q = f.order();
    std::set<std::uint64_t> out;
    std::vector<Elem> c(gens.rows(), 0);
    for (;;) {
        Vec v(gens.cols(), 0);
        for (std::size_t r = 0; r < gens.rows(); ++r)
            for (std::size_t j = 0; j < gens.cols(); ++j) v[j] = f.add(v[j], f.mul(c[r], gens(r, j)));
        std::uint64_t code = 0;
        for (std::size_t j = gens.cols(); j-- > 0;) code = code * q + v[j];
        out.insert(code);
        std::size_t i = c.size();
        bool carry = true;
        while (i-- > 0) {
            if (++c[i] < q) {
                carry = false;
                break;
            }
            c[i] = 0;
        }
        if (carry) break;
    }
    return out;
}

inline std::size_t dim_from_size(std::size_t size, std::uint64_t q) {
    std::size_t d = 0;
    while (size > 1) {
        size /= q;
        ++d;
    }
    return d;
}

// dim of the intersection, by vector sets
inline std::size_t brute_meet(const Subspace& a, const Subspace& b) {
    auto x = vector_set(a.basis()), y = vector_set(b.basis());
    std::size_t c = 0;
    for (auto v : x) c += y.count(v);
    return dim_from_size(c, a.field().order());
}

inline Vec unit(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

inline Vec vsum(std::size_t n, std::initializer_list<std::size_t> idx) {
    Vec v(n, 0);
    for (auto i : idx) v[i] = 1;
    return v;
}

}  // namespace testsupport
