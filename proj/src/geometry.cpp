#include "trifact/geometry.hpp"

#include <algorithm>

#include "trifact/table.hpp"

namespace trifact {

ProjParams ProjParams::make(std::uint64_t q, std::size_t n, std::size_t m, std::size_t k, std::size_t j) {
    Field f = Field::of_order(q);
    if (m < 1 || k < 1 || m >= n || k >= n)
        throw Error(Errc::BadParams, "need 1 <= m, k < n");
    std::size_t lo = m + k > n ? m + k - n : 0;
    if (j < lo || j > std::min(m, k)) throw Error(Errc::BadParams, "j outside [max(0,m+k-n), min(m,k)]");
    return ProjParams{f, n, m, k, j};
}

BisParams BisParams::make(std::uint64_t q, std::size_t k, std::size_t m, std::size_t k1, std::size_t k2) {
    Field f = Field::of_order(q);
    if (k < 1 || m < 1 || m >= 2 * k) throw Error(Errc::BadParams, "need 1 <= m < 2k");
    if (k1 > k2) throw Error(Errc::BadParams, "need k1 <= k2");
    if (k2 > k || k1 + k2 > m) throw Error(Errc::BadParams, "need k2 <= k and k1 + k2 <= m");
    if (m > k && k1 < m - k) throw Error(Errc::BadParams, "an m-space meets each half in at least m - k");
    return BisParams{f, k, m, k1, k2};
}

bool incident(const ProjParams& p, const Subspace& point, const Subspace& line) {
    if (point.dim() != p.m || line.dim() != p.k || point.ambient() != p.n)
        throw Error(Errc::BadDimensions, "element dimensions do not match parameters");
    return intersection_dim(point, line) == p.j;
}

bool incident(const BisParams& p, const Subspace& point, const Bisection& line) {
    if (point.dim() != p.m || line.first.dim() != p.k || point.ambient() != p.n())
        throw Error(Errc::BadDimensions, "element dimensions do not match parameters");
    std::size_t a = intersection_dim(point, line.first), b = intersection_dim(point, line.second);
    return std::min(a, b) == p.k1 && std::max(a, b) == p.k2;
}

Flag canonical_flag(const ProjParams& p) {
    std::vector<std::size_t> u, w;
    for (std::size_t i = 0; i < p.m; ++i) u.push_back(i);
    for (std::size_t i = 0; i < p.j; ++i) w.push_back(i);
    for (std::size_t i = p.m; i < p.m + p.k - p.j; ++i) w.push_back(i);
    return Flag{Subspace::coordinate(p.field, p.n, u), Subspace::coordinate(p.field, p.n, w)};
}

Bisection coordinate_bisection(const Field& f, std::size_t k) {
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < k; ++i) {
        a.push_back(i);
        b.push_back(k + i);
    }
    return Bisection::make(Subspace::coordinate(f, 2 * k, a), Subspace::coordinate(f, 2 * k, b));
}

Subspace canonical_point(const BisParams& p) {
    const std::size_t n = p.n(), r = p.m - p.k1 - p.k2;
    Mat g(p.field, 0, n);
    auto row = [&](std::initializer_list<std::size_t> idx) {
        Vec v(n, 0);
        for (auto i : idx) v[i] = 1;
        g.append_row(v);
    };
    for (std::size_t i = 0; i < p.k1; ++i) row({i});
    for (std::size_t i = 0; i < p.k2; ++i) row({p.k + i});
    for (std::size_t i = 0; i < r; ++i) row({p.k1 + i, p.k + p.k2 + i});
    return Subspace::span(g);
}

ProjParams dual(const ProjParams& p) {
    return ProjParams{p.field, p.n, p.n - p.m, p.n - p.k, p.n - p.m - p.k + p.j};
}

BisParams dual(const BisParams& p) {
    return BisParams{p.field, p.k, 2 * p.k - p.m, p.k - p.m + p.k1, p.k - p.m + p.k2};
}

Bisection perp(const Bisection& b) { return Bisection::make(perp(b.first), perp(b.second)); }

bool coset_degenerate(const ProjParams& p) { return p.j == p.m && p.j == p.k; }

void require_proper(const ProjParams& p) {
    if (coset_degenerate(p))
        throw Error(Errc::DegenerateGeometry, "j = m = k makes each line a single point");
}

NondegeneracyReport nondegeneracy_check(const ProjParams& p, std::uint64_t budget) {
    const std::uint64_t np = gaussian_u64(p.n, p.m, p.q()), nl = gaussian_u64(p.n, p.k, p.q());
    if (np > budget || nl > budget || np * nl > budget)
        throw Error(Errc::TooLarge, "incidence enumeration exceeds the budget");
    SubspaceTable points(p.field, p.n, p.m, budget);
    std::vector<std::uint64_t> per_point(points.size(), 0);
    NondegeneracyReport r;
    r.points = np;
    r.lines = nl;
    r.min_points_per_line = UINT64_MAX;
    for_each_subspace(p.field, p.n, p.k, [&](const Subspace& w) {
        auto dims = points.intersection_dims(w);
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i] == p.j) {
                ++c;
                ++per_point[i];
            }
        r.min_points_per_line = std::min(r.min_points_per_line, c);
    });
    r.min_lines_per_point = *std::min_element(per_point.begin(), per_point.end());
    return r;
}

NondegeneracyReport nondegeneracy_check(const BisParams& p, std::uint64_t budget) {
    const std::uint64_t np = gaussian_u64(p.n(), p.m, p.q()), nl = bisection_count(p.k, p.q());
    if (np > budget || nl > budget || np * nl > budget)
        throw Error(Errc::TooLarge, "incidence enumeration exceeds the budget");
    SubspaceTable points(p.field, p.n(), p.m, budget);
    std::vector<std::uint64_t> per_point(points.size(), 0);
    NondegeneracyReport r;
    r.points = np;
    r.lines = nl;
    r.min_points_per_line = UINT64_MAX;
    for (const auto& b : bisections(p.field, p.k, budget)) {
        auto d1 = points.intersection_dims(b.first), d2 = points.intersection_dims(b.second);
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < d1.size(); ++i) {
            std::size_t lo = std::min(d1[i], d2[i]), hi = std::max(d1[i], d2[i]);
            if (lo == p.k1 && hi == p.k2) {
                ++c;
                ++per_point[i];
            }
        }
        r.min_points_per_line = std::min(r.min_points_per_line, c);
    }
    r.min_lines_per_point = *std::min_element(per_point.begin(), per_point.end());
    return r;
}

nlohmann::json to_json(const ProjParams& p) {
    return {{"family", "proj"}, {"q", p.q()}, {"n", p.n}, {"m", p.m}, {"k", p.k}, {"j", p.j}};
}

nlohmann::json to_json(const BisParams& p) {
    return {{"family", "bis"}, {"q", p.q()}, {"k", p.k}, {"m", p.m}, {"k1", p.k1}, {"k2", p.k2}};
}

namespace {

std::uint64_t field_u(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<std::int64_t>() < 0)
        throw Error(Errc::Parse, std::string("missing or invalid field '") + key + "'");
    return j.at(key).get<std::uint64_t>();
}

void expect_family(const nlohmann::json& j, const char* fam) {
    if (!j.is_object() || !j.contains("family") || j.at("family") != fam)
        throw Error(Errc::Parse, std::string("expected family '") + fam + "'");
}

}  // namespace

ProjParams proj_from_json(const nlohmann::json& j) {
    expect_family(j, "proj");
    return ProjParams::make(field_u(j, "q"), field_u(j, "n"), field_u(j, "m"), field_u(j, "k"), field_u(j, "j"));
}

BisParams bis_from_json(const nlohmann::json& j) {
    expect_family(j, "bis");
    return BisParams::make(field_u(j, "q"), field_u(j, "k"), field_u(j, "m"), field_u(j, "k1"), field_u(j, "k2"));
}

nlohmann::json to_json(const Subspace& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis().row_vec(i));
    return {{"q", s.field().order()}, {"n", s.ambient()}, {"basis", rows}};
}

nlohmann::json to_json(const Bisection& b) { return {{"first", to_json(b.first)}, {"second", to_json(b.second)}}; }

}  // namespace trifact
