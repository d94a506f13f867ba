#pragma once

// Packed GF(2) matrices: one uint64 per row, bit c holds column c.

#include <cstdint>
#include <vector>

#include "trifact/gfq.hpp"

namespace trifact {

struct Gf2Mat {
    std::size_t cols = 0;
    std::vector<std::uint64_t> rows;

    static Gf2Mat from_mat(const Mat& m);  // m must be over GF(2), cols <= 64
    Mat to_mat() const;

    friend bool operator==(const Gf2Mat&, const Gf2Mat&) = default;
};

// In-place reduced row echelon form; zero rows dropped. Returns rank.
std::size_t gf2_rref(Gf2Mat& m);
std::size_t gf2_rank(Gf2Mat m);
std::uint64_t gf2_vec_times(std::uint64_t v, const Gf2Mat& m);

}  // namespace trifact
