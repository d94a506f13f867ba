#include "trifact/subspace.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>

namespace trifact {

Subspace::Subspace(Field f, std::size_t n) : basis_(std::move(f), 0, n), n_(n) {}

Subspace Subspace::span(const Mat& generators) {
    return Subspace(rref(generators).reduced, generators.cols());
}

Subspace Subspace::span(const Field& f, std::size_t n, const std::vector<Vec>& generators) {
    return span(Mat::from_rows(f, generators, n));
}

Subspace Subspace::coordinate(const Field& f, std::size_t n, const std::vector<std::size_t>& idx) {
    Mat m(f, 0, n);
    for (auto i : idx) {
        if (i >= n) throw Error(Errc::NotInAmbient, "coordinate index out of range");
        Vec v(n, 0);
        v[i] = 1;
        m.append_row(v);
    }
    return span(m);
}

Subspace Subspace::whole(const Field& f, std::size_t n) { return Subspace(Mat::identity(f, n), n); }

Subspace Subspace::from_rref(Mat m) {
    std::size_t n = m.cols();
    return Subspace(std::move(m), n);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != n_) throw Error(Errc::AmbientMismatch, "vector length");
    Mat m = basis_;
    m.append_row(v);
    return rank(m) == dim();
}

bool Subspace::contains(const Subspace& w) const {
    check_same_ambient(*this, w);
    if (w.dim() > dim()) return false;
    return rank(vstack(basis_, w.basis_)) == dim();
}

Subspace Subspace::apply(const Mat& g) const {
    if (g.rows() != n_ || g.cols() != n_) throw Error(Errc::DimensionMismatch, "group element shape");
    return span(basis_ * g);
}

std::string Subspace::key() const {
    std::string k;
    k.reserve(2 + basis_.data().size());
    k.push_back(static_cast<char>(n_));
    k.push_back(static_cast<char>(dim()));
    const bool small = field().order() <= 256;
    for (Elem x : basis_.data()) {
        if (small) {
            k.push_back(static_cast<char>(x));
        } else {
            for (int b = 0; b < 8; ++b) k.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
        }
    }
    return k;
}

void check_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw Error(Errc::AmbientMismatch, "subspaces live in different spaces");
}

Subspace sum(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace perp(const Subspace& a) {
    if (a.dim() == 0) return Subspace::whole(a.field(), a.ambient());
    return Subspace::from_rref(kernel(a.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    return perp(sum(perp(a), perp(b)));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    return a.dim() + b.dim() - rank(vstack(a.basis(), b.basis()));
}

Subspace complement(const Subspace& a) {
    Rref rr = rref(a.basis());
    std::vector<bool> piv(a.ambient(), false);
    for (auto p : rr.pivots) piv[p] = true;
    std::vector<std::size_t> idx;
    for (std::size_t c = 0; c < a.ambient(); ++c)
        if (!piv[c]) idx.push_back(c);
    return Subspace::coordinate(a.field(), a.ambient(), idx);
}

bool is_diagonal(const Subspace& u, const Subspace& y1, const Subspace& y2) {
    if (!sum(y1, y2).contains(u)) throw Error(Errc::NotContained, "subspace not inside y1 + y2");
    return intersection_dim(u, y1) == 0 && intersection_dim(u, y2) == 0;
}

Bisection Bisection::make(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    if (a.dim() != b.dim() || a.dim() * 2 != a.ambient())
        throw Error(Errc::BadDimensions, "bisection halves must be k-spaces of V(2k,q)");
    if (intersection_dim(a, b) != 0) throw Error(Errc::BadDimensions, "bisection halves meet");
    if (b < a) return Bisection{b, a};
    return Bisection{a, b};
}

std::uint64_t gaussian_u64(std::size_t n, std::size_t m, std::uint64_t q) {
    if (m > n) return 0;
    // product of (q^(n-i) - 1)/(q^(i+1) - 1); each partial product is [n, i+1]
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 num = 1, den = 1;
    auto qpow = [&](std::size_t e) -> unsigned __int128 {
        unsigned __int128 r = 1;
        for (std::size_t i = 0; i < e; ++i) {
            r *= q;
            if (r > cap) return static_cast<unsigned __int128>(cap) + 1;
        }
        return r;
    };
    for (std::size_t i = 0; i < m; ++i) {
        unsigned __int128 a = qpow(n - i), b = qpow(i + 1);
        if (a > cap) return cap;
        num *= (a - 1);
        den *= (b - 1);
        unsigned __int128 g = num, h = den;
        while (h) {
            unsigned __int128 t = g % h;
            g = h;
            h = t;
        }
        num /= g;
        den /= g;
        if (num > cap) return cap;
    }
    return static_cast<std::uint64_t>(num / den);
}

// ------------------------------------------------------------ Grassmannian

Grassmannian::Grassmannian(Field f, std::size_t n, std::size_t m) : f_(std::move(f)), n_(n), m_(m) {
    if (m > n) throw Error(Errc::BadDimensions, "subspace dimension exceeds ambient");
}

bool Grassmannian::next_pivots() {
    if (piv_.empty()) return false;
    std::size_t i = m_;
    while (i-- > 0) {
        if (piv_[i] < n_ - m_ + i) {
            ++piv_[i];
            for (std::size_t j = i + 1; j < m_; ++j) piv_[j] = piv_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void Grassmannian::setup_free() {
    free_.clear();
    std::vector<bool> is_piv(n_, false);
    for (auto p : piv_) is_piv[p] = true;
    for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t c = piv_[r] + 1; c < n_; ++c)
            if (!is_piv[c]) free_.emplace_back(r, c);
    vals_.assign(free_.size(), 0);
}

bool Grassmannian::next(Mat& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        piv_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) piv_[i] = i;
        setup_free();
    } else {
        // odometer over free entries, last fastest
        std::size_t i = vals_.size();
        bool carried = true;
        while (i-- > 0) {
            if (++vals_[i] < f_.order()) {
                carried = false;
                break;
            }
            vals_[i] = 0;
        }
        if (carried) {
            if (!next_pivots()) {
                done_ = true;
                return false;
            }
            setup_free();
        }
    }
    Mat m(f_, m_, n_);
    for (std::size_t r = 0; r < m_; ++r) m(r, piv_[r]) = 1;
    for (std::size_t i = 0; i < free_.size(); ++i) m(free_[i].first, free_[i].second) = vals_[i];
    out = std::move(m);
    return true;
}

std::vector<Subspace> grassmannian(const Field& f, std::size_t n, std::size_t m, std::uint64_t budget) {
    if (gaussian_u64(n, m, f.order()) > budget)
        throw Error(Errc::TooLarge, "Grassmannian exceeds the enumeration budget");
    std::vector<Subspace> out;
    for_each_subspace(f, n, m, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

void for_each_subspace(const Field& f, std::size_t n, std::size_t m,
                       const std::function<void(const Subspace&)>& fn) {
    Grassmannian g(f, n, m);
    Mat cur(f, 0, n);
    while (g.next(cur)) fn(Subspace::from_rref(cur));
}

void for_each_complement(const Subspace& u, const std::function<void(const Subspace&)>& fn) {
    const Field& f = u.field();
    const std::size_t n = u.ambient(), d = u.dim(), c = n - d;
    Rref rr = rref(u.basis());
    std::vector<bool> is_piv(n, false);
    for (auto p : rr.pivots) is_piv[p] = true;
    std::vector<std::size_t> nonpiv;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_piv[i]) nonpiv.push_back(i);
    // row i of the complement: e_{nonpiv[i]} + sum_j x[i][j] u_j
    std::vector<Elem> x(c * d, 0);
    for (;;) {
        Mat m(f, c, n);
        for (std::size_t i = 0; i < c; ++i) {
            m(i, nonpiv[i]) = 1;
            for (std::size_t j = 0; j < d; ++j) {
                Elem a = x[i * d + j];
                if (!a) continue;
                for (std::size_t col = 0; col < n; ++col)
                    if (u.basis()(j, col)) m(i, col) = f.add(m(i, col), f.mul(a, u.basis()(j, col)));
            }
        }
        fn(Subspace::span(m));
        std::size_t i = x.size();
        bool carried = true;
        while (i-- > 0) {
            if (++x[i] < f.order()) {
                carried = false;
                break;
            }
            x[i] = 0;
        }
        if (carried) return;
    }
}

std::uint64_t bisection_count(std::size_t k, std::uint64_t q) {
    std::uint64_t g = gaussian_u64(2 * k, k, q);
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 total = g;
    for (std::size_t i = 0; i < k * k; ++i) {
        total *= q;
        if (total > static_cast<unsigned __int128>(cap) * 2) return cap;
    }
    total /= 2;
    return total > cap ? cap : static_cast<std::uint64_t>(total);
}

std::vector<Bisection> bisections(const Field& f, std::size_t k, std::uint64_t budget) {
    if (bisection_count(k, f.order()) > budget)
        throw Error(Errc::TooLarge, "bisection set exceeds the enumeration budget");
    std::vector<Bisection> out;
    for_each_subspace(f, 2 * k, k, [&](const Subspace& v1) {
        for_each_complement(v1, [&](const Subspace& v2) {
            if (v1 < v2) out.push_back(Bisection{v1, v2});
        });
    });
    return out;
}

Mat extend_rows(const Mat& rows, const Mat& pool) {
    Mat acc = rows;
    Mat added(rows.field(), 0, rows.cols());
    std::size_t r = rank(acc);
    for (std::size_t i = 0; i < pool.rows(); ++i) {
        Vec v = pool.row_vec(i);
        acc.append_row(v);
        std::size_t r2 = rank(acc);
        if (r2 > r) {
            added.append_row(v);
            r = r2;
        } else {
            acc = rref(acc).reduced;
        }
    }
    return added;
}

Mat pair_frame(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    if (a.dim() != b.dim()) throw Error(Errc::BadDimensions, "pair halves differ in dimension");
    const Field& f = a.field();
    const std::size_t n = a.ambient();
    Subspace common = intersect(a, b);
    Mat a_ext = extend_rows(common.basis(), a.basis());
    Mat b_ext = extend_rows(common.basis(), b.basis());
    Mat g = vstack(vstack(a_ext, common.basis()), b_ext);
    g = vstack(g, extend_rows(g, Mat::identity(f, n)));
    return g;
}

Mat bisection_frame(const Subspace& first, const Subspace& second) {
    check_same_ambient(first, second);
    Mat g = vstack(first.basis(), second.basis());
    if (g.rows() != first.ambient() || rank(g) != g.rows())
        throw Error(Errc::BadDimensions, "not a bisection");
    return g;
}

std::string to_text(const Subspace& s) { return to_text(s.basis()); }

Subspace subspace_from_text(std::istream& in) {
    Mat m = mat_from_text(in);
    Subspace s = Subspace::span(m);
    if (s.dim() != m.rows()) throw Error(Errc::Parse, "basis rows are dependent");
    return s;
}

std::string to_text(const Bisection& b) { return to_text(b.first) + "\n" + to_text(b.second); }

Bisection bisection_from_text(std::istream& in) {
    Subspace a = subspace_from_text(in);
    Subspace b = subspace_from_text(in);
    try {
        return Bisection::make(a, b);
    } catch (const Error& e) {
        throw Error(Errc::Parse, e.what());
    }
}

}  // namespace trifact
