#include "trifact/gf2.hpp"

#include <bit>

namespace trifact {

Gf2Mat Gf2Mat::from_mat(const Mat& m) {
    if (m.field().order() != 2) throw Error(Errc::AmbientMismatch, "packed form needs GF(2)");
    if (m.cols() > 64) throw Error(Errc::TooLarge, "packed form holds at most 64 columns");
    Gf2Mat g;
    g.cols = m.cols();
    g.rows.resize(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j)) g.rows[i] |= 1ULL << j;
    return g;
}

Mat Gf2Mat::to_mat() const {
    Mat m(Field::make(2, 1), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (rows[i] >> j) & 1;
    return m;
}

std::size_t gf2_rref(Gf2Mat& m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
        const std::uint64_t bit = 1ULL << c;
        std::size_t s = r;
        while (s < m.rows.size() && !(m.rows[s] & bit)) ++s;
        if (s == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[s]);
        for (std::size_t i = 0; i < m.rows.size(); ++i)
            if (i != r && (m.rows[i] & bit)) m.rows[i] ^= m.rows[r];
        ++r;
    }
    m.rows.resize(r);
    return r;
}

std::size_t gf2_rank(Gf2Mat m) { return gf2_rref(m); }

std::uint64_t gf2_vec_times(std::uint64_t v, const Gf2Mat& m) {
    std::uint64_t r = 0;
    while (v) {
        int i = std::countr_zero(v);
        r ^= m.rows[static_cast<std::size_t>(i)];
        v &= v - 1;
    }
    return r;
}

}  // namespace trifact
