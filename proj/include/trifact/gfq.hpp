#pragma once

// Finite fields GF(p^e) and dense matrices over them.
//
// An element is a code in [0, q). The code of a0 + a1 x + ... + a(e-1) x^(e-1)
// is a0 + a1 p + ... + a(e-1) p^(e-1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "trifact/error.hpp"

namespace trifact {

using Elem = std::uint64_t;
using Vec = std::vector<Elem>;

bool is_prime(std::uint64_t n);

namespace detail {
struct FieldImpl;
}

class Field {
public:
    // Builds GF(p^e) with the lexicographically least monic irreducible
    // modulus of degree e.
    static Field make(std::uint64_t p, unsigned e);
    // Builds GF(q) for a prime power q.
    static Field of_order(std::uint64_t q);

    std::uint64_t p() const;
    unsigned degree() const;
    std::uint64_t order() const;
    // Coefficients c0..ce of the monic modulus (ce == 1).
    const std::vector<std::uint64_t>& modulus() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws Singular on 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const;

    // A generator of the multiplicative group. Factors q - 1 by trial
    // division, so keep q modest.
    Elem primitive() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p() == b.p() && a.degree() == b.degree();
    }
    friend std::strong_ordering operator<=>(const Field& a, const Field& b) {
        return a.order() <=> b.order();
    }

private:
    static Field build(std::uint64_t p, unsigned e);
    explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::FieldImpl> impl_;
};

// Polynomial irreducibility over GF(p), coefficients low to high.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p);

class Mat {
public:
    Mat(Field f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Mat identity(const Field& f, std::size_t n);
    static Mat from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Elem* row(std::size_t r) const { return data_.data() + r * cols_; }
    Elem* row(std::size_t r) { return data_.data() + r * cols_; }
    Vec row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols_); }
    const std::vector<Elem>& data() const { return data_; }

    void append_row(const Vec& v);
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    // Field, then shape, then entries row-major.
    friend std::strong_ordering operator<=>(const Mat& a, const Mat& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
Mat vstack(const Mat& a, const Mat& b);
Vec vec_times_mat(const Vec& v, const Mat& m);

struct Rref {
    Mat reduced;                      // zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);
// Rows span {x : m * x^T = 0}, returned in reduced echelon form.
Mat kernel(const Mat& m);
Mat inverse(const Mat& m);

// "q rows cols" then one line per row of codes.
std::string to_text(const Mat& m);
Mat mat_from_text(std::istream& in);
Mat mat_from_text(const std::string& s);

}  // namespace trifact
