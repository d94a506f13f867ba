#include "trifact/witness.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "trifact/predicate.hpp"

namespace trifact {

namespace {

using Rows = std::vector<Vec>;

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

Vec vadd(const Field& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vscale(const Field& f, Elem c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

Rows take(const Rows& r, std::size_t from, std::size_t count) {
    if (from + count > r.size()) throw Error(Errc::UnimplementedCase, "block slice out of range");
    return Rows(r.begin() + from, r.begin() + from + count);
}

Rows drop(const Rows& r, std::size_t from) {
    if (from > r.size()) throw Error(Errc::UnimplementedCase, "block slice out of range");
    return Rows(r.begin() + from, r.end());
}

template <typename... Rest>
Rows cat(Rows a, const Rest&... rest) {
    (a.insert(a.end(), rest.begin(), rest.end()), ...);
    return a;
}

// {x_i + y_i} over the shorter list
Rows diag(const Field& f, const Rows& x, const Rows& y) {
    Rows out;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) out.push_back(vadd(f, x[i], y[i]));
    return out;
}

std::pair<Rows, Rows> diag_pair_rows(const Field& f, Rows e, Rows g, std::size_t r) {
    if (r > std::min(e.size(), g.size())) throw Error(Errc::BadDimensions, "r exceeds the smaller summand");
    if (r == 0) return {};
    if (e.size() > g.size()) std::swap(e, g);
    Rows z1, z2;
    if (f.order() > 2) {
        for (std::size_t i = 0; i < r; ++i) {
            z1.push_back(vadd(f, e[i], g[i]));
            z2.push_back(vadd(f, e[i], vscale(f, 2, g[i])));
        }
        return {z1, z2};
    }
    if (g.size() == 1) throw Error(Errc::NoSuchPair, "only one diagonal point in a 2-dim space over GF(2)");
    for (std::size_t i = 0; i < r; ++i) {
        z1.push_back(vadd(f, e[i], g[i]));
        z2.push_back(vadd(f, e[i], g[(i + 1) % g.size()]));
    }
    if (r == e.size() && r == g.size()) z2.back() = vadd(f, vadd(f, e[r - 1], g[0]), g[1]);
    return {z1, z2};
}

Subspace span_exact(const Field& f, std::size_t n, const Rows& rows, const char* what) {
    Subspace s = Subspace::span(f, n, rows);
    if (s.dim() != rows.size()) throw Error(Errc::CertificationFailed, std::string(what) + ": dependent rows");
    return s;
}

Bisection certify(const BisParams& p, const CanonicalPair& u, const Rows& v1, const Rows& v2, const char* what) {
    const Field& f = p.field;
    Subspace a = span_exact(f, p.n(), v1, what), b = span_exact(f, p.n(), v2, what);
    if (a.dim() != p.k || b.dim() != p.k || intersection_dim(a, b) != 0)
        throw Error(Errc::CertificationFailed, std::string(what) + ": not a bisection");
    Bisection out = Bisection::make(a, b);
    if (!incident(p, u.first, out) || !incident(p, u.second, out))
        throw Error(Errc::CertificationFailed, std::string(what) + ": wrong intersection pattern");
    return out;
}

// Frame of V(2k) around the canonical pair with meet t (m <= k):
// a = U1 only, c = U1 cap U2, b = U2 only, rest spans a complement.
struct Frame {
    Rows a, c, b, rest;
};

Frame make_frame(std::size_t k, std::size_t m, std::size_t t) {
    Frame fr;
    const std::size_t n = 2 * k;
    for (std::size_t i = 0; i < m - t; ++i) fr.a.push_back(unit_vec(n, i));
    for (std::size_t i = 0; i < t; ++i) fr.c.push_back(unit_vec(n, m - t + i));
    for (std::size_t i = 0; i < m - t; ++i) fr.b.push_back(unit_vec(n, m + i));
    for (std::size_t i = 2 * m - t; i < n; ++i) fr.rest.push_back(unit_vec(n, i));
    return fr;
}

// Splits ubar1 + ubar2 + rest into x1 (dim d1), x2 (dim d2), each meeting
// ubar1 and ubar2 trivially.
std::pair<Rows, Rows> split_complement(const Field& f, const Rows& u1, const Rows& u2, const Rows& rest,
                                       std::size_t d1, std::size_t d2) {
    const std::size_t mb = u1.size();
    if (d1 < mb || d2 < mb || d1 + d2 != 2 * mb + rest.size())
        throw Error(Errc::UnimplementedCase, "split dimensions inconsistent");
    if (mb == 0) return {take(rest, 0, d1), drop(rest, d1)};
    if (mb > 1 || f.order() > 2) {
        auto [z1, z2] = diag_pair_rows(f, u1, u2, mb);
        return {cat(z1, take(rest, 0, d1 - mb)), cat(z2, drop(rest, d1 - mb))};
    }
    const Vec& x = u1[0];
    const Vec& y = u2[0];
    if (d1 >= 2)
        return {cat(Rows{vadd(f, x, y)}, take(rest, 0, d1 - 1)), cat(Rows{vadd(f, x, rest[0])}, drop(rest, d1 - 1))};
    if (d2 >= 2)
        return {cat(Rows{vadd(f, x, rest[0])}, drop(rest, d2 - 1)), cat(Rows{vadd(f, x, y)}, take(rest, 0, d2 - 1))};
    throw Error(Errc::UnimplementedCase, "no split of a 2-dim complement over GF(2)");
}

using RowPair = std::pair<Rows, Rows>;

RowPair smallcase_a(const Field& f, const Frame& fr) {
    Rows v1 = cat(drop(fr.a, 1), Rows{vadd(f, fr.a[0], fr.b[1])}, diag(f, fr.rest, fr.c));
    Rows v2 = cat(drop(fr.b, 1), Rows{vadd(f, fr.a[0], fr.b[0])}, fr.rest);
    return {v1, v2};
}

// The coordinate bisection is incident with u1p, u2p; pull it back onto the canonical pair.
RowPair pulled_back(const Field& f, std::size_t k, const Rows& u1p, const Rows& u2p) {
    const std::size_t n = 2 * k;
    Subspace a = Subspace::span(f, n, u1p), b = Subspace::span(f, n, u2p);
    Mat ginv = inverse(pair_frame(a, b));
    Rows v1, v2;
    for (std::size_t i = 0; i < k; ++i) {
        v1.push_back(ginv.row_vec(i));
        v2.push_back(ginv.row_vec(k + i));
    }
    return {v1, v2};
}

RowPair pattern_zero(const BisParams& p, const Frame& fr, std::size_t t) {
    const Field& f = p.field;
    const std::size_t k = p.k, m = p.m, n = 2 * k;
    const bool q2 = p.q() == 2;
    if (!(q2 && m - t == 1) && !(q2 && k - m + t == 1)) {
        auto [d1, d2] = diag_pair_rows(f, fr.a, fr.b, m - t);
        auto [e1, e2] = diag_pair_rows(f, cat(fr.c, take(fr.rest, 0, k - m)), drop(fr.rest, k - m), k - m + t);
        return {cat(d1, e1), cat(d2, e2)};
    }
    if (t + 1 == m) {
        if (m + 1 <= k) {
            Rows c3 = take(fr.rest, 0, k - 1);
            return {cat(diag(f, fr.a, fr.b), c3), cat(diag(f, cat(fr.c, fr.b), c3), drop(fr.rest, k - 1))};
        }
        Rows u1p, u2p;
        for (std::size_t i = 0; i < k; ++i) u1p.push_back(vadd(f, unit_vec(n, i), unit_vec(n, k + i)));
        u2p = take(u1p, 0, k - 1);
        u2p.push_back(vadd(f, u1p[k - 1], unit_vec(n, 0)));
        return pulled_back(f, k, u1p, u2p);
    }
    if (m + 1 == k && t == 0 && m >= 2) {
        auto [d1, d2] = diag_pair_rows(f, fr.a, fr.b, m);
        return {cat(d1, take(fr.rest, 0, 1)), cat(d2, drop(fr.rest, 1))};
    }
    if (m == k && t == 1 && k >= 3) {
        Rows u1p, first, second;
        for (std::size_t i = 0; i < k; ++i) u1p.push_back(vadd(f, unit_vec(n, i), unit_vec(n, k + i)));
        for (std::size_t i = 1; i < k; ++i) {
            first.push_back(unit_vec(n, i));
            second.push_back(unit_vec(n, k + i));
        }
        auto z = diag_pair_rows(f, first, second, k - 1);
        return pulled_back(f, k, u1p, cat(Rows{u1p[0]}, z.second));
    }
    throw Error(Errc::UnimplementedCase, "pattern (0,0) branch not covered");
}

RowPair case_meet_small(const BisParams& p, const Frame& fr, std::size_t t) {
    const Field& f = p.field;
    const std::size_t k = p.k, m = p.m, k1 = p.k1, k2 = p.k2;
    Rows u11 = take(fr.a, k1 - t, k2);
    Rows u22 = cat(fr.c, take(fr.b, 0, k2 - t));
    Rows u21 = take(fr.b, k2 - t, k1);
    Rows b1 = cat(u11, u21);
    Rows b2 = cat(fr.c, take(fr.a, 0, k1 - t), take(fr.b, 0, k2 - t));
    Rows ub1 = drop(fr.a, k1 + k2 - t), ub2 = drop(fr.b, k1 + k2 - t);
    const std::size_t mb = m - k1 - k2;
    if (mb == 1 && fr.rest.empty() && p.q() == 2) {
        if (k1 > 0)
            return {cat(b1, Rows{vadd(f, ub1[0], ub2[0])}), cat(b2, Rows{vadd(f, vadd(f, ub1[0], u11[0]), u21[0])})};
        return {cat(u11, Rows{vadd(f, u11[0], ub2[0])}), cat(u22, Rows{vadd(f, u22[0], ub1[0])})};
    }
    auto [x1, x2] = split_complement(f, ub1, ub2, fr.rest, k - k1 - k2, k - k1 - k2 + t);
    return {cat(b1, x1), cat(b2, x2)};
}

RowPair case_meet_medium(const BisParams& p, const Frame& fr, std::size_t t) {
    const Field& f = p.field;
    const std::size_t k = p.k, k1 = p.k1, k2 = p.k2;
    Rows u22 = cat(take(fr.c, 0, k1), take(fr.b, 0, k2 - k1));
    Rows b1 = cat(take(fr.c, k1, t - k1), take(fr.a, 0, k1 + k2 - t), take(fr.b, k2 - k1, 2 * k1 - t));
    Rows ub1 = drop(fr.a, k1 + k2 - t), ub2 = drop(fr.b, k1 + k2 - t);
    auto [x1, x2] = split_complement(f, ub1, ub2, fr.rest, k + t - 2 * k1 - k2, k - k2);
    return {cat(b1, x1), cat(u22, x2)};
}

RowPair case_meet_large(const BisParams& p, const Frame& fr, std::size_t t) {
    const Field& f = p.field;
    const std::size_t k = p.k, m = p.m, k1 = p.k1, k2 = p.k2;
    Rows u12 = cat(take(fr.c, k1, k1), take(fr.a, 0, k2 - k1));
    Rows u21 = cat(take(fr.c, 0, k1), take(fr.b, 0, k2 - k1));
    Rows t3 = drop(fr.c, 2 * k1);
    Rows ub1 = drop(fr.a, k2 - k1), ub2 = drop(fr.b, k2 - k1);
    Rows t1 = take(fr.rest, 0, t - 2 * k1);
    Rows t2 = diag(f, t1, t3);
    const std::size_t s = k - m + k1;
    Rows s1 = take(fr.rest, t - 2 * k1, s), s2 = take(fr.rest, t - 2 * k1 + s, s);
    if (ub1.empty()) return {cat(u21, t1, s1), cat(u12, t2, s2)};
    if (p.q() == 2 && ub1.size() + s == 1) return smallcase_a(f, fr);
    auto [r1, r2] = diag_pair_rows(f, cat(ub1, s1), cat(ub2, s2), ub1.size() + s);
    return {cat(u21, t1, r1), cat(u12, t2, r2)};
}

RowPair case_far_within(const BisParams& p, const Frame& fr, std::size_t t) {
    const Field& f = p.field;
    const std::size_t k = p.k, m = p.m, k1 = p.k1, k2 = p.k2;
    Rows v21 = take(fr.a, 0, k2 - t), ub1 = drop(fr.a, k2 - t);
    Rows v22 = take(fr.b, 0, k2 - t), ub2 = drop(fr.b, k2 - t);
    Rows c1 = take(fr.rest, 0, k + 2 * k2 - 2 * m), c2 = drop(fr.rest, k + 2 * k2 - 2 * m);
    Rows v2 = cat(c2, v21, v22, fr.c);
    Rows v11 = take(ub1, 0, k1), w1 = drop(ub1, k1);
    Rows v12 = take(ub2, 0, k1), w2 = drop(ub2, k1);
    Rows v1 = cat(c1, v11, v12, diag(f, w1, cat(v22, c2)), diag(f, w2, cat(v21, c2)));
    return {v1, v2};
}

RowPair case_far_beyond(const BisParams& p, const Frame& fr, std::size_t t) {
    const Field& f = p.field;
    const std::size_t k = p.k, m = p.m, k1 = p.k1, k2 = p.k2;
    Rows t13 = take(fr.c, 0, t - k2), t2 = drop(fr.c, t - k2);
    Rows c1 = take(fr.rest, 0, m - t);
    Rows c2 = take(fr.rest, m - t, k + t - k2 - m);
    Rows c3 = drop(fr.rest, k - k2);
    Rows v2 = cat(c1, c2, t2);
    const bool spill = k + t > 2 * m;
    Rows top = spill ? cat(diag(f, t2, take(c3, 0, k2)), drop(c3, k2)) : diag(f, t2, c3);
    if (t >= k1 + k2) {
        Rows t1 = take(t13, 0, k1), t3 = drop(t13, k1);
        return {cat(t1, diag(f, fr.a, c1), diag(f, fr.b, c1), top, diag(f, t3, c2)), v2};
    }
    const std::size_t pd = m - k1 - k2;
    Rows p1 = take(fr.a, 0, pd), v11 = drop(fr.a, pd);
    Rows p2 = take(fr.b, 0, pd), v12 = drop(fr.b, pd);
    return {cat(v11, v12, t13, top, diag(f, p1, p2), diag(f, p1, cat(c1, c2))), v2};
}

Rows table_rows(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> rows) {
    Rows out;
    for (auto r : rows) {
        Vec v(n, 0);
        for (auto i : r) v[i - 1] = 1;
        out.push_back(v);
    }
    return out;
}

RowPair table_pair(std::size_t k, std::size_t t) {
    const std::size_t n = 2 * k;
    switch (k * 10 + t) {
        case 21: return {table_rows(n, {{3}, {4}}), table_rows(n, {{1}, {2, 4}})};
        case 31: return {table_rows(n, {{1, 6}, {2, 5}, {4, 6}}), table_rows(n, {{2}, {3}, {4}})};
        case 32: return {table_rows(n, {{1, 6}, {4, 6}, {5}}), table_rows(n, {{2}, {3}, {6}})};
        case 41: return {table_rows(n, {{5}, {6}, {7}, {8}}), table_rows(n, {{1}, {2}, {3}, {4, 8}})};
        case 42: return {table_rows(n, {{1, 8}, {2, 7}, {5, 8}, {6, 7}}), table_rows(n, {{2}, {3}, {4}, {5}})};
        case 43: return {table_rows(n, {{1, 8}, {5, 8}, {6}, {7}}), table_rows(n, {{2}, {3}, {4}, {8}})};
    }
    throw Error(Errc::BadParams, "no table entry for this (k, t)");
}

std::pair<RowPair, const char*> construct(const BisParams& p, std::size_t t) {
    const std::size_t k = p.k, m = p.m, k1 = p.k1, k2 = p.k2;
    Frame fr = make_frame(k, m, t);
    if (p.q() == 2 && k1 == 0 && m == k && k2 + 1 == k) {
        if (t == 0) return {smallcase_a(p.field, fr), "small case"};
        return {table_pair(k, t), "table"};
    }
    if (k1 == 0 && k2 == 0) return {pattern_zero(p, fr, t), "pattern (0,0)"};
    if (t <= k1) return {case_meet_small(p, fr, t), "t <= k1"};
    if (t <= 2 * k1) return {case_meet_medium(p, fr, t), "k1 < t <= 2k1"};
    if (t + k2 <= m + k1) return {case_meet_large(p, fr, t), "2k1 < t <= m+k1-k2"};
    if (t <= k2) return {case_far_within(p, fr, t), "t > m+k1-k2, t <= k2"};
    return {case_far_beyond(p, fr, t), "t > m+k1-k2, t > k2"};
}

std::uint64_t upow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

DiagonalPair diagonal_pair(const Subspace& y1, const Subspace& y2, std::size_t r) {
    check_same_ambient(y1, y2);
    if (intersection_dim(y1, y2) != 0) throw Error(Errc::PreconditionViolated, "summands must meet trivially");
    if (r == 0) throw Error(Errc::PreconditionViolated, "r must be positive");
    const Field& f = y1.field();
    Rows e, g;
    for (std::size_t i = 0; i < y1.dim(); ++i) e.push_back(y1.basis().row_vec(i));
    for (std::size_t i = 0; i < y2.dim(); ++i) g.push_back(y2.basis().row_vec(i));
    auto [z1, z2] = diag_pair_rows(f, e, g, r);
    Subspace a = span_exact(f, y1.ambient(), z1, "diagonal pair");
    Subspace b = span_exact(f, y1.ambient(), z2, "diagonal pair");
    if (intersection_dim(a, b) != 0 || !is_diagonal(a, y1, y2) || !is_diagonal(b, y1, y2))
        throw Error(Errc::CertificationFailed, "diagonal pair");
    return {a, b};
}

SetWitness subset_witness(std::size_t n, std::size_t m, std::size_t k, std::size_t j, std::size_t t) {
    const std::size_t lo = m + k > n ? m + k - n : 0;
    if (m < 1 || 2 * m > n || k < 1 || k >= n || j < lo || j > std::min(m, k) || 2 * j > k || t >= m)
        throw Error(Errc::PreconditionViolated, "subset witness parameters out of range");
    std::vector<std::size_t> common;
    auto range = [&](std::size_t a, std::size_t b) {  // [a, b)
        for (std::size_t i = a; i < b; ++i) common.push_back(i);
    };
    if (j + t <= m) {
        range(0, j);
        range(2 * m - t - j, 2 * m - t);
        range(2 * m - t, n - t);
    } else if (j <= t) {
        range(m - t, m - t + j);
        range(2 * m - t, n + j - t);
    } else {
        range(m - j, m + j - t);
        range(2 * m - t, n);
    }
    std::sort(common.begin(), common.end());
    SetWitness w;
    w.common = common;
    auto in_first = [&](std::size_t i) { return i < m; };
    auto in_second = [&](std::size_t i) { return i >= m - t && i < 2 * m - t; };
    if (k - 2 * j + 2 * m <= n) {
        std::vector<std::size_t> sub, outside;
        for (auto i : common) (in_first(i) || in_second(i) ? sub : outside).push_back(i);
        sub.insert(sub.end(), outside.begin(), outside.begin() + (k - sub.size()));
        std::sort(sub.begin(), sub.end());
        w.subset = sub;
    } else {
        // pair each element of one member only with one of the other member only,
        // and each element of both with one of neither, so no part sits inside either
        std::vector<std::size_t> only1, only2, both, neither;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::binary_search(common.begin(), common.end(), i)) continue;
            bool a = in_first(i), b = in_second(i);
            (a && b ? both : a ? only1 : b ? only2 : neither).push_back(i);
        }
        if (only1.size() != only2.size() || both.size() != neither.size())
            throw Error(Errc::UnimplementedCase, "unbalanced remainder");
        std::vector<std::vector<std::size_t>> parts;
        for (std::size_t i = 0; i < only1.size(); ++i) parts.push_back({only1[i], only2[i]});
        for (std::size_t i = 0; i < both.size(); ++i) parts.push_back({both[i], neither[i]});
        const std::size_t want = k - 2 * j + 2 * m - n;
        while (parts.size() > want) {
            auto last = parts.back();
            parts.pop_back();
            parts.back().insert(parts.back().end(), last.begin(), last.end());
        }
        for (auto& pt : parts) std::sort(pt.begin(), pt.end());
        w.parts = parts;
    }
    return w;
}

CanonicalPair canonical_pair(const Field& f, std::size_t n, std::size_t m, std::size_t t) {
    if (t >= m || 2 * m - t > n) throw Error(Errc::BadDimensions, "no pair of m-spaces with that meet");
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < m; ++i) {
        a.push_back(i);
        b.push_back(m - t + i);
    }
    return {Subspace::coordinate(f, n, a), Subspace::coordinate(f, n, b)};
}

Subspace theorem1_witness(const ProjParams& p, std::size_t t) {
    const std::size_t tmin = 2 * p.m > p.n ? 2 * p.m - p.n : 0;
    if (t < tmin || t >= p.m) throw Error(Errc::PreconditionViolated, "t outside the pair range");
    if (!thm1_predicate(p)) throw Error(Errc::PredicateFails, "no line through every point pair");
    const Field& f = p.field;
    CanonicalPair u = canonical_pair(f, p.n, p.m, t);
    Subspace s(f, p.n);
    if (2 * p.m > p.n) {
        ProjParams d = dual(p);
        Subspace sd = theorem1_witness(d, p.n - 2 * p.m + t);
        s = perp(sd.apply(pair_frame(perp(u.first), perp(u.second))));
    } else {
        SetWitness w = subset_witness(p.n, p.m, p.k, p.j, t);
        Rows rows;
        if (w.subset) {
            for (auto i : *w.subset) rows.push_back(unit_vec(p.n, i));
        } else {
            for (auto i : w.common) rows.push_back(unit_vec(p.n, i));
            for (auto& part : *w.parts) {
                Vec v(p.n, 0);
                for (auto i : part) v[i] = 1;
                rows.push_back(v);
            }
        }
        s = span_exact(f, p.n, rows, "projective witness");
    }
    if (s.dim() != p.k || !incident(p, u.first, s) || !incident(p, u.second, s))
        throw Error(Errc::CertificationFailed, "projective witness has the wrong meets");
    return s;
}

Bisection table_bisection(std::size_t k, std::size_t t) {
    Field f = Field::of_order(2);
    auto [v1, v2] = table_pair(k, t);
    return Bisection::make(span_exact(f, 2 * k, v1, "table"), span_exact(f, 2 * k, v2, "table"));
}

Bisection bisection_witness(const BisParams& p, std::size_t t) {
    const std::size_t tmin = p.m > p.k ? 2 * (p.m - p.k) : 0;
    if (t < tmin || t >= p.m) throw Error(Errc::PreconditionViolated, "t outside the pair range");
    if (!thm2_predicate(p)) throw Error(Errc::PredicateFails, "no bisection through every point pair");
    CanonicalPair u = canonical_pair(p.field, p.n(), p.m, t);
    if (p.m > p.k) {
        BisParams d = dual(p);
        Bisection bd = bisection_witness(d, 2 * p.k - 2 * p.m + t);
        Bisection out = perp(bd.apply(pair_frame(perp(u.first), perp(u.second))));
        if (!incident(p, u.first, out) || !incident(p, u.second, out))
            throw Error(Errc::CertificationFailed, "dualized bisection witness");
        return out;
    }
    auto [rows, name] = construct(p, t);
    return certify(p, u, rows.first, rows.second, name);
}

std::vector<Subspace> desarguesian_spread(const Field& f, std::size_t k) {
    if (k < 1) throw Error(Errc::BadDimensions, "k must be positive");
    const std::uint64_t q = f.order();
    const std::uint64_t qk = upow(q, k);
    if (qk > (1u << 20)) throw Error(Errc::TooLarge, "extension field too large");
    Field big = Field::make(f.p(), f.degree() * static_cast<unsigned>(k));
    // embed GF(q): root of the modulus of f, or the prime field directly
    std::vector<Elem> embed(q);
    if (f.degree() == 1) {
        for (Elem a = 0; a < q; ++a) embed[a] = a;
    } else {
        const auto& mod = f.modulus();
        Elem root = 0;
        for (Elem w = 2; w < big.order() && root == 0; ++w) {
            Elem acc = 0;
            for (std::size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, w), mod[i]);
            if (acc == 0) root = w;
        }
        for (Elem a = 0; a < q; ++a) {
            Elem v = 0, pw = 1, c = a;
            for (unsigned i = 0; i < f.degree(); ++i) {
                v = big.add(v, big.mul(c % f.p(), pw));
                c /= f.p();
                pw = big.mul(pw, root);
            }
            embed[a] = v;
        }
    }
    // basis 1, x, .., x^(k-1) for a primitive x, plus coordinates of every element
    std::vector<Elem> basis(k);
    Elem x = big.primitive();
    basis[0] = 1;
    for (std::size_t i = 1; i < k; ++i) basis[i] = big.mul(basis[i - 1], x);
    std::vector<Vec> coords(qk);
    for (std::uint64_t code = 0; code < qk; ++code) {
        Vec c(k);
        Elem v = 0;
        std::uint64_t r = code;
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = r % q;
            r /= q;
            v = big.add(v, big.mul(embed[c[i]], basis[i]));
        }
        coords[v] = c;
    }
    const std::size_t n = 2 * k;
    std::vector<Subspace> out;
    auto row_of = [&](Elem left, Elem right) {
        Vec v(n);
        std::copy(coords[left].begin(), coords[left].end(), v.begin());
        std::copy(coords[right].begin(), coords[right].end(), v.begin() + k);
        return v;
    };
    for (Elem z = 0; z < qk; ++z) {
        Rows rows;
        for (auto b : basis) rows.push_back(row_of(b, big.mul(b, z)));
        out.push_back(span_exact(f, n, rows, "spread element"));
    }
    Rows inf;
    for (auto b : basis) inf.push_back(row_of(0, b));
    out.push_back(span_exact(f, n, inf, "spread element"));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (intersection_dim(out[i], out[j]) != 0)
                throw Error(Errc::CertificationFailed, "spread elements meet");
    return out;
}

Subspace fifth_disjoint(const Subspace& a, const Subspace& b, const Subspace& c, const Subspace& d) {
    const Subspace* pis[4] = {&a, &b, &c, &d};
    const std::size_t k = a.dim(), n = a.ambient();
    for (auto s : pis) {
        check_same_ambient(a, *s);
        if (s->dim() != k || n != 2 * k) throw Error(Errc::BadDimensions, "need four k-spaces of V(2k)");
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (intersection_dim(*pis[i], *pis[j]) != 0) throw Error(Errc::NotPairwiseDisjoint, "inputs meet");
    const Field& f = a.field();
    if (upow(f.order(), k) < 4) throw Error(Errc::PreconditionViolated, "need q^k >= 4");
    auto disjoint_from_all = [&](const Subspace& s) {
        for (auto p : pis)
            if (intersection_dim(s, *p) != 0) return false;
        return true;
    };
    if (f.order() == 2) {
        // coordinates of c in the basis (a, b) give the frame g: a = [I|0], b = [0|I], c = [I|I]
        Mat ab = vstack(a.basis(), b.basis());
        Mat coeff = c.basis() * inverse(ab);
        Mat x(f, k, k), y(f, k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                x(i, j) = coeff(i, j);
                y(i, j) = coeff(i, k + j);
            }
        Mat g = vstack(x * a.basis(), y * b.basis());
        Mat dn = rref(d.basis() * inverse(g)).reduced;  // [I | A]
        Mat mblock(f, k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) mblock(i, j) = dn(i, k + j);
        Mat minv = inverse(mblock);
        Mat sig(f, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            sig(i, i) = 1;
            for (std::size_t j = 0; j < k; ++j) sig(i, k + j) = minv(i, j);
        }
        Subspace out = Subspace::span(sig * g);
        if (!disjoint_from_all(out)) throw Error(Errc::CertificationFailed, "fifth subspace meets an input");
        return out;
    }
    Grassmannian gr(f, n, k);
    Mat m(f, 0, 0);
    while (gr.next(m)) {
        Subspace s = Subspace::from_rref(m);
        if (disjoint_from_all(s)) return s;
    }
    throw Error(Errc::NotFound, "no k-space disjoint from all four");
}

}  // namespace trifact
