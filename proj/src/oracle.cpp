#include "trifact/oracle.hpp"

#include <algorithm>
#include <random>

#include "trifact/parallel.hpp"
#include "trifact/predicate.hpp"
#include "trifact/table.hpp"
#include "trifact/witness.hpp"

namespace trifact {

const char* method_name(Method m) {
    switch (m) {
        case Method::Predicate: return "predicate";
        case Method::Oracle: return "oracle";
        case Method::Witness: return "witness";
    }
    return "?";
}

nlohmann::json to_json(const CompletenessVerdict& v) {
    nlohmann::json j{{"complete", v.complete}, {"method", method_name(v.method)}, {"cases", v.cases}};
    if (v.failing_t) j["failing_t"] = *v.failing_t;
    if (v.failing_points)
        j["failing_points"] = {to_json(v.failing_points->first), to_json(v.failing_points->second)};
    if (v.failing_lines) j["failing_lines"] = {to_json(v.failing_lines->first), to_json(v.failing_lines->second)};
    return j;
}

namespace {

bool pattern_is(std::size_t a, std::size_t b, std::size_t k1, std::size_t k2) {
    return std::min(a, b) == k1 && std::max(a, b) == k2;
}

}  // namespace

CompletenessVerdict collinear_oracle_proj(const ProjParams& p, const OracleOptions& opt) {
    const SubspaceTable& lines = shared_table(p.field, p.n, p.k, opt.budget);
    const std::size_t tmin = 2 * p.m > p.n ? 2 * p.m - p.n : 0;
    CompletenessVerdict v;
    v.method = Method::Oracle;
    for (std::size_t t = tmin; t < p.m; ++t) {
        CanonicalPair u = canonical_pair(p.field, p.n, p.m, t);
        auto d1 = lines.intersection_dims(u.first), d2 = lines.intersection_dims(u.second);
        ++v.cases;
        auto hit = parallel_first(lines.size(), opt.threads, [&](std::size_t i) { return d1[i] == p.j && d2[i] == p.j; });
        if (!hit) {
            v.complete = false;
            v.failing_t = t;
            v.failing_points = std::make_pair(u.first, u.second);
            return v;
        }
    }
    v.complete = true;
    return v;
}

CompletenessVerdict collinear_witness_proj(const ProjParams& p) {
    const std::size_t tmin = 2 * p.m > p.n ? 2 * p.m - p.n : 0;
    CompletenessVerdict v;
    v.method = Method::Witness;
    for (std::size_t t = tmin; t < p.m; ++t) {
        CanonicalPair u = canonical_pair(p.field, p.n, p.m, t);
        Subspace w = theorem1_witness(p, t);
        if (!incident(p, u.first, w) || !incident(p, u.second, w))
            throw Error(Errc::CertificationFailed, "witness line is not incident");
        ++v.cases;
    }
    v.complete = true;
    return v;
}

CompletenessVerdict collinear_oracle_bis(const BisParams& p, BisSearch mode, const OracleOptions& opt) {
    const std::size_t n = p.n(), tmin = p.m > p.k ? 2 * (p.m - p.k) : 0;
    CompletenessVerdict v;
    v.method = mode == BisSearch::WitnessFirst ? Method::Witness : Method::Oracle;
    for (std::size_t t = tmin; t < p.m; ++t) {
        CanonicalPair u = canonical_pair(p.field, n, p.m, t);
        ++v.cases;
        if (mode == BisSearch::WitnessFirst) {
            try {
                Bisection b = bisection_witness(p, t);
                if (incident(p, u.first, b) && incident(p, u.second, b)) continue;
                throw Error(Errc::CertificationFailed, "bisection witness is not incident");
            } catch (const Error& e) {
                if (e.code() == Errc::CertificationFailed) throw;
            }
            v.method = Method::Oracle;
        }
        const BisectionIndex& idx = shared_bisections(p.field, p.k, opt.budget);
        auto d1 = idx.halves().intersection_dims(u.first), d2 = idx.halves().intersection_dims(u.second);
        auto hit = parallel_first(idx.size(), opt.threads, [&](std::size_t i) {
            auto [a, b] = idx.pair(i);
            return pattern_is(d1[a], d1[b], p.k1, p.k2) && pattern_is(d2[a], d2[b], p.k1, p.k2);
        });
        if (!hit) {
            v.complete = false;
            v.failing_t = t;
            v.failing_points = std::make_pair(u.first, u.second);
            return v;
        }
    }
    v.complete = true;
    return v;
}

std::optional<Subspace> common_point(const BisParams& p, const Bisection& a, const Bisection& b,
                                     std::uint64_t budget) {
    const SubspaceTable& pts = shared_table(p.field, p.n(), p.m, budget);
    auto a1 = pts.intersection_dims(a.first), a2 = pts.intersection_dims(a.second);
    auto b1 = pts.intersection_dims(b.first), b2 = pts.intersection_dims(b.second);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pattern_is(a1[i], a2[i], p.k1, p.k2) && pattern_is(b1[i], b2[i], p.k1, p.k2)) return pts.at(i);
    return std::nullopt;
}

namespace {

// Points incident with the coordinate bisection, and for each of them the
// meet dimension with every k-space.
struct ConcurrentFrame {
    const BisectionIndex* lines;
    std::size_t base;  // index of the coordinate bisection
    std::vector<std::vector<std::uint8_t>> dims;  // [point on base][k-space]
};

ConcurrentFrame concurrent_frame(const BisParams& p, const OracleOptions& opt) {
    const BisectionIndex& idx = shared_bisections(p.field, p.k, opt.budget);
    const SubspaceTable& pts = shared_table(p.field, p.n(), p.m, opt.budget);
    if (static_cast<double>(idx.size()) * static_cast<double>(pts.size()) > static_cast<double>(opt.budget) * 100)
        throw Error(Errc::TooLarge, "line-point scan exceeds the budget");
    Bisection b0 = coordinate_bisection(p.field, p.k);
    ConcurrentFrame fr{&idx, idx.index_of(b0), {}};
    auto e1 = pts.intersection_dims(b0.first), e2 = pts.intersection_dims(b0.second);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pattern_is(e1[i], e2[i], p.k1, p.k2)) fr.dims.push_back(idx.halves().intersection_dims(pts.at(i)));
    return fr;
}

bool frame_covers(const BisParams& p, const ConcurrentFrame& fr, std::size_t line) {
    auto [a, b] = fr.lines->pair(line);
    for (const auto& row : fr.dims)
        if (pattern_is(row[a], row[b], p.k1, p.k2)) return true;
    return false;
}

}  // namespace

CompletenessVerdict concurrent_oracle(const BisParams& p, const OracleOptions& opt) {
    ConcurrentFrame fr = concurrent_frame(p, opt);
    CompletenessVerdict v;
    v.method = Method::Oracle;
    const std::size_t total = fr.lines->size();
    v.cases = total - 1;
    auto bad = parallel_first(total, opt.threads, [&](std::size_t i) { return i != fr.base && !frame_covers(p, fr, i); });
    v.complete = !bad;
    if (bad) v.failing_lines = std::make_pair(fr.lines->at(fr.base), fr.lines->at(*bad));
    return v;
}

CompletenessVerdict concurrent_oracle(const BisParams& p, const std::vector<std::pair<Bisection, Bisection>>& reps,
                                      const OracleOptions& opt) {
    CompletenessVerdict v;
    v.method = Method::Oracle;
    for (const auto& [a, b] : reps) {
        if (a == b) throw Error(Errc::PreconditionViolated, "representative pair repeats a bisection");
        ++v.cases;
        if (!common_point(p, a, b, opt.budget)) {
            v.complete = false;
            v.failing_lines = std::make_pair(a, b);
            return v;
        }
    }
    v.complete = true;
    return v;
}

std::vector<Bisection> concurrent_failures(const BisParams& p, const OracleOptions& opt) {
    ConcurrentFrame fr = concurrent_frame(p, opt);
    std::vector<Bisection> out;
    for (std::size_t i = 0; i < fr.lines->size(); ++i)
        if (i != fr.base && !frame_covers(p, fr, i)) out.push_back(fr.lines->at(i));
    return out;
}

// ---- the reduction from level k to level k-1

namespace {

std::uint64_t upow(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= q;
    return r;
}

Vec decode(std::uint64_t code, std::size_t n, std::uint64_t q) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i, code /= q) v[i] = static_cast<Elem>(code % q);
    return v;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

// Rows of x written in the basis `basis` (rows of x must lie in its span).
Mat coordinates(const Mat& basis, const Mat& x) {
    const Field& f = basis.field();
    Mat full = vstack(basis, extend_rows(basis, Mat::identity(f, basis.cols())));
    Mat c = x * inverse(full);
    Mat out(f, c.rows(), basis.rows());
    for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t j = 0; j < basis.rows(); ++j) out(r, j) = c(r, j);
    return out;
}

Mat drop_first_col(const Mat& m) {
    Mat out(m.field(), m.rows(), m.cols() - 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 1; c < m.cols(); ++c) out(r, c - 1) = m(r, c);
    return out;
}

bool meets_none(const Subspace& s, std::initializer_list<const Subspace*> others) {
    for (auto* o : others)
        if (intersection_dim(s, *o) != 0) return false;
    return true;
}

std::optional<Subspace> search_four(const Subspace& a1, const Subspace& a2, const Subspace& b1, const Subspace& b2) {
    const SubspaceTable& t = shared_table(a1.field(), a1.ambient(), a1.dim());
    auto d1 = t.intersection_dims(a1), d2 = t.intersection_dims(a2);
    auto d3 = t.intersection_dims(b1), d4 = t.intersection_dims(b2);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!d1[i] && !d2[i] && !d3[i] && !d4[i]) return t.at(i);
    return std::nullopt;
}

}  // namespace

FourSpaceResult disjoint_from_four(const Subspace& a1, const Subspace& a2, const Subspace& b1, const Subspace& b2,
                                   std::size_t base_level, bool force_step) {
    const std::size_t k = a1.dim(), n = a1.ambient();
    const Field& f = a1.field();
    for (const Subspace* s : {&a2, &b1, &b2})
        if (s->dim() != k || s->ambient() != n) throw Error(Errc::BadDimensions, "four k-spaces of V(2k) expected");
    if (n != 2 * k || k == 0) throw Error(Errc::BadDimensions, "four k-spaces of V(2k) expected");
    if (intersection_dim(a1, a2) || intersection_dim(b1, b2))
        throw Error(Errc::PreconditionViolated, "each pair must be a bisection");
    FourSpaceResult res;
    if (k == 1 || (k <= base_level && !force_step)) {
        res.route = FourSpaceResult::Route::Search;
        res.common_complement = search_four(a1, a2, b1, b2);
        return res;
    }
    const Subspace* pa[2] = {&a1, &a2};
    const Subspace* pb[2] = {&b1, &b2};
    bool crossing = false;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) crossing = crossing || intersection_dim(*pa[x], *pb[y]) > 0;
    if (!crossing) {
        res.route = FourSpaceResult::Route::Fifth;
        if (upow(f.order(), k) < 4) return res;
        Subspace s = fifth_disjoint(a1, a2, b1, b2);
        if (!meets_none(s, {&a1, &a2, &b1, &b2})) throw Error(Errc::CertificationFailed, "fifth space meets one");
        res.common_complement = s;
        return res;
    }
    res.route = FourSpaceResult::Route::Quotient;
    const std::uint64_t total = upow(f.order(), n);
    // Over GF(2) a particular tau can have every extension blocked, so
    // each crossing pair, each line alpha in it and (at the search level)
    // each tau is tried in turn.
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const Subspace &pi2 = *pa[x], &pi1 = *pa[1 - x], &rho1 = *pb[y], &rho2 = *pb[1 - y];
            Subspace meet = intersect(pi2, rho1);
            if (meet.dim() == 0) continue;
            Subspace normal = perp(sum(pi2, rho1));
            const Vec nv = normal.basis().row_vec(0);
            Subspace hyper = perp(Subspace::span(f, n, {nv}));
            Subspace pi1_cut = intersect(pi1, hyper), rho2_cut = intersect(rho2, hyper);
            auto extend = [&](const Subspace& tau) -> std::optional<Subspace> {
                ++res.attempts;
                for (std::uint64_t code = 1; code < total; ++code) {
                    Vec v = decode(code, n, f.order());
                    if (dot(f, v, nv) == 0) continue;
                    Mat g = tau.basis();
                    g.append_row(v);
                    Subspace s = Subspace::span(g);
                    if (meets_none(s, {&a1, &a2, &b1, &b2})) return s;
                }
                return std::nullopt;
            };
            for (std::uint64_t code = 1; code < total; ++code) {
                Vec alpha = decode(code, n, f.order());
                if (!meet.contains(alpha)) continue;
                auto lead = std::find_if(alpha.begin(), alpha.end(), [](Elem e) { return e != 0; });
                if (*lead != 1) continue;  // one vector per line
                Mat alpha_row = Mat::from_rows(f, {alpha}, n);
                Mat rest = extend_rows(alpha_row, hyper.basis());
                Mat frame = vstack(alpha_row, rest);
                auto image = [&](const Subspace& s) {
                    return Subspace::span(drop_first_col(coordinates(frame, s.basis())));
                };
                Subspace q1 = image(pi1_cut), q2 = image(pi2), r1 = image(rho1), r2 = image(rho2_cut);
                auto lift = [&](const Subspace& t) { return Subspace::span(t.basis() * rest); };
                if (k - 1 <= base_level || k - 1 == 1) {
                    const SubspaceTable& t = shared_table(f, n - 2, k - 1);
                    auto d1 = t.intersection_dims(q1), d2 = t.intersection_dims(q2);
                    auto d3 = t.intersection_dims(r1), d4 = t.intersection_dims(r2);
                    for (std::size_t i = 0; i < t.size(); ++i) {
                        if (d1[i] || d2[i] || d3[i] || d4[i]) continue;
                        if (auto s = extend(lift(t.at(i)))) {
                            res.common_complement = s;
                            return res;
                        }
                    }
                } else {
                    FourSpaceResult inner = disjoint_from_four(q1, q2, r1, r2, base_level);
                    if (!inner.common_complement) continue;
                    if (auto s = extend(lift(*inner.common_complement))) {
                        res.common_complement = s;
                        return res;
                    }
                }
            }
        }
    return res;
}

std::size_t concurrent_base_level(std::uint64_t q) {
    if (q >= 4) return 1;
    return q == 3 ? 2 : 3;
}

namespace {

Subspace random_space(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng, const Mat& seed_rows) {
    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(f.order() - 1));
    for (;;) {
        Mat m = seed_rows;
        while (m.rows() < k) {
            Vec v(n);
            for (auto& x : v) x = d(rng);
            m.append_row(v);
        }
        Subspace s = Subspace::span(m);
        if (s.dim() == k) return s;
    }
}

Subspace random_complement(const Subspace& s, std::mt19937_64& rng) {
    for (;;) {
        Subspace c = random_space(s.field(), s.ambient(), s.dim(), rng, Mat(s.field(), 0, s.ambient()));
        if (intersection_dim(c, s) == 0) return c;
    }
}

}  // namespace

InductionReport induction_step_check(std::size_t k, std::uint64_t q, std::size_t samples, std::uint64_t seed,
                                     bool allow_unproven_base) {
    if (k < 2) throw Error(Errc::BadParams, "the reduction needs k >= 2");
    const std::size_t base = concurrent_base_level(q);
    if (k - 1 < base && !allow_unproven_base)
        throw Error(Errc::BaseCaseMissing, "level k-1 is not known to be concurrently complete");
    Field f = Field::of_order(q);
    const std::size_t n = 2 * k;
    std::mt19937_64 rng(seed);
    std::vector<Subspace> spread = desarguesian_spread(f, k);
    Mat none(f, 0, n);
    InductionReport rep;
    for (std::size_t s = 0; s < samples; ++s) {
        Subspace a1(f, n), a2(f, n), b1(f, n), b2(f, n);
        switch (s % 3) {
            case 0: {
                Mat g(f, n, n);
                for (;;) {
                    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(q - 1));
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < n; ++c) g(r, c) = d(rng);
                    if (rank(g) == n) break;
                }
                std::vector<std::size_t> pick(spread.size());
                for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
                std::shuffle(pick.begin(), pick.end(), rng);
                a1 = spread[pick[0]].apply(g);
                a2 = spread[pick[1]].apply(g);
                b1 = spread[pick[2]].apply(g);
                b2 = spread[pick[3]].apply(g);
                break;
            }
            case 1: {
                a1 = random_space(f, n, k, rng, none);
                a2 = random_complement(a1, rng);
                Vec shared = a2.basis().row_vec(rng() % k);
                b1 = random_space(f, n, k, rng, Mat::from_rows(f, {shared}, n));
                b2 = random_complement(b1, rng);
                break;
            }
            default:
                a1 = random_space(f, n, k, rng, none);
                a2 = random_complement(a1, rng);
                b1 = random_space(f, n, k, rng, none);
                b2 = random_complement(b1, rng);
        }
        FourSpaceResult r = disjoint_from_four(a1, a2, b1, b2, base, true);
        ++rep.tested;
        if (r.route == FourSpaceResult::Route::Fifth) ++rep.via_fifth;
        if (r.route == FourSpaceResult::Route::Quotient) ++rep.via_quotient;
        if (r.attempts > 1) ++rep.retried;
        if (!r.common_complement) ++rep.failures;
    }
    return rep;
}

bool subset_geometry_oracle(std::size_t n, std::size_t m, std::size_t k, std::size_t j) {
    if (n > 14) throw Error(Errc::TooLarge, "subset enumeration limited to n <= 14");
    if (m < 1 || 2 * m > n || k < 1 || k >= n) throw Error(Errc::BadParams, "need 1 <= m <= n/2 and 1 <= k < n");
    if (j > std::min(m, k) || j + n < m + k) throw Error(Errc::BadParams, "j outside the admissible range");
    for (std::size_t t = 0; t < m; ++t) {
        const std::uint32_t first = (1u << m) - 1, second = ((1u << m) - 1) << (m - t);
        bool found = false;
        for (std::uint32_t s = 0; s < (1u << n) && !found; ++s) {
            if (static_cast<std::size_t>(__builtin_popcount(s)) != k) continue;
            found = static_cast<std::size_t>(__builtin_popcount(s & first)) == j &&
                    static_cast<std::size_t>(__builtin_popcount(s & second)) == j;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace trifact
