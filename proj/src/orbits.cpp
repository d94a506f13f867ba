#include "trifact/orbits.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace trifact {

namespace {

Mat block_diag(const Mat& a, const Mat& b) {
    const std::size_t n = a.rows() + b.rows();
    Mat g(a.field(), n, n);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) g(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) g(a.rows() + r, a.cols() + c) = b(r, c);
    return g;
}

GeneratorSet conjugated(GeneratorSet g, const Mat& frame) {
    Mat inv = inverse(frame);
    for (auto& x : g.generators) x = inv * x * frame;
    return g;
}

}  // namespace

GeneratorSet gl_generators(std::size_t n, const Field& f) {
    if (n == 0) throw Error(Errc::BadDimensions, "GL(0) has no matrices");
    GeneratorSet g{{}, "GL(" + std::to_string(n) + "," + std::to_string(f.order()) + ")"};
    if (f.order() > 2) {
        Mat d = Mat::identity(f, n);
        d(0, 0) = f.primitive();
        g.generators.push_back(d);
    }
    if (n >= 2) {
        Mat t = Mat::identity(f, n);
        t(0, 1) = 1;
        g.generators.push_back(t);
        Mat c(f, n, n);
        for (std::size_t i = 0; i < n; ++i) c(i, (i + 1) % n) = 1;
        g.generators.push_back(c);
    }
    if (g.generators.empty()) g.generators.push_back(Mat::identity(f, n));
    return g;
}

GeneratorSet bisection_stabiliser_generators(const Bisection& b) {
    const Field& f = b.first.field();
    const std::size_t k = b.first.dim();
    if (b.first.ambient() != 2 * k) throw Error(Errc::BadDimensions, "not a bisection of V(2k)");
    GeneratorSet out{{}, "bisection stabiliser"};
    Mat id = Mat::identity(f, k);
    for (const Mat& a : gl_generators(k, f).generators)
        if (!(a == id)) out.generators.push_back(block_diag(a, id));
    out.generators.push_back(block_diag(id, id));
    Mat& swap = out.generators.back();
    swap = Mat(f, 2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        swap(i, k + i) = 1;
        swap(k + i, i) = 1;
    }
    return conjugated(out, bisection_frame(b.first, b.second));
}

GeneratorSet subspace_stabiliser_generators(const Subspace& u) {
    const Field& f = u.field();
    const std::size_t n = u.ambient(), m = u.dim();
    if (m == 0 || m == n) {
        GeneratorSet g = gl_generators(n, f);
        g.description = "subspace stabiliser";
        return g;
    }
    GeneratorSet out{{}, "subspace stabiliser"};
    Mat ia = Mat::identity(f, m), ib = Mat::identity(f, n - m);
    for (const Mat& a : gl_generators(m, f).generators)
        if (!(a == ia)) out.generators.push_back(block_diag(a, ib));
    for (const Mat& b : gl_generators(n - m, f).generators)
        if (!(b == ib)) out.generators.push_back(block_diag(ia, b));
    Mat root = Mat::identity(f, n);
    root(m, 0) = 1;  // e(m+1) -> e(m+1) + e1
    out.generators.push_back(root);
    Mat frame = vstack(u.basis(), extend_rows(u.basis(), Mat::identity(f, n)));
    return conjugated(out, frame);
}

std::uint64_t group_order(const GeneratorSet& g, std::uint64_t limit) {
    if (g.generators.empty()) return 1;
    auto key = [](const Mat& m) {
        std::string s(m.data().size(), '\0');
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<char>(m.data()[i]);
        return s;
    };
    const Field& f = g.generators[0].field();
    Mat id = Mat::identity(f, g.generators[0].rows());
    std::unordered_set<std::string> seen{key(id)};
    std::deque<Mat> queue{id};
    while (!queue.empty()) {
        Mat x = std::move(queue.front());
        queue.pop_front();
        for (const Mat& s : g.generators) {
            Mat y = x * s;
            if (seen.insert(key(y)).second) {
                if (seen.size() > limit) throw Error(Errc::TooLarge, "group closure exceeds the limit");
                queue.push_back(std::move(y));
            }
        }
    }
    return seen.size();
}

OrbitReport orbit_partition(std::size_t n, const std::vector<std::vector<std::uint32_t>>& perms,
                            const std::vector<std::uint64_t>& order_key, std::optional<std::size_t> skip) {
    if (order_key.size() != n) throw Error(Errc::DimensionMismatch, "one order key per element");
    for (const auto& p : perms)
        if (p.size() != n) throw Error(Errc::DimensionMismatch, "permutation of the wrong degree");
    constexpr std::uint32_t none = UINT32_MAX;
    std::vector<std::uint32_t> orbit(n, none);
    std::vector<std::size_t> rep;
    std::vector<std::uint64_t> len;
    std::vector<std::uint32_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        if (orbit[s] != none || (skip && *skip == s)) continue;
        const std::uint32_t id = static_cast<std::uint32_t>(rep.size());
        std::size_t best = s;
        std::uint64_t size = 0;
        queue.assign(1, static_cast<std::uint32_t>(s));
        orbit[s] = id;
        while (!queue.empty()) {
            std::uint32_t x = queue.back();
            queue.pop_back();
            ++size;
            if (order_key[x] < order_key[best]) best = x;
            for (const auto& p : perms) {
                std::uint32_t y = p[x];
                if (skip && *skip == y) throw Error(Errc::PreconditionViolated, "skipped element is not fixed");
                if (orbit[y] == none) {
                    orbit[y] = id;
                    queue.push_back(y);
                }
            }
        }
        rep.push_back(best);
        len.push_back(size);
    }
    // renumber orbits by representative order
    std::vector<std::uint32_t> by(rep.size());
    std::iota(by.begin(), by.end(), 0u);
    std::sort(by.begin(), by.end(), [&](auto a, auto b) { return order_key[rep[a]] < order_key[rep[b]]; });
    std::vector<std::uint32_t> rename(rep.size());
    OrbitReport r;
    for (std::size_t i = 0; i < by.size(); ++i) {
        rename[by[i]] = static_cast<std::uint32_t>(i);
        r.representatives.push_back(rep[by[i]]);
        r.lengths.push_back(len[by[i]]);
        r.total += len[by[i]];
    }
    std::sort(r.lengths.begin(), r.lengths.end());
    r.orbit_of = std::move(orbit);
    for (auto& o : r.orbit_of)
        if (o != none) o = rename[o];
    return r;
}

std::vector<std::uint64_t> subspace_order_key(const SubspaceTable& t) {
    std::vector<std::size_t> idx(t.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return t.at(a) < t.at(b); });
    std::vector<std::uint64_t> key(t.size());
    for (std::size_t i = 0; i < idx.size(); ++i) key[idx[i]] = i;
    return key;
}

OrbitReport orbits_on_subspaces(const GeneratorSet& g, const SubspaceTable& t) {
    std::vector<std::vector<std::uint32_t>> perms;
    for (const Mat& x : g.generators) perms.push_back(t.permutation(x));
    return orbit_partition(t.size(), perms, subspace_order_key(t));
}

BisectionOrbits orbits_on_bisections(const GeneratorSet& g, const BisectionIndex& idx, std::optional<std::size_t> skip) {
    const SubspaceTable& halves = idx.halves();
    const auto hkey = subspace_order_key(halves);
    const std::uint64_t width = halves.size();
    std::vector<std::uint64_t> key(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto [a, b] = idx.pair(i);
        key[i] = std::min(hkey[a], hkey[b]) * width + std::max(hkey[a], hkey[b]);
    }
    std::vector<std::vector<std::uint32_t>> perms;
    for (const Mat& x : g.generators) {
        auto hp = halves.permutation(x);
        std::vector<std::uint32_t> p(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            auto [a, b] = idx.pair(i);
            auto j = idx.find(hp[a], hp[b]);
            if (!j) throw Error(Errc::NotFound, "image of a bisection is not a bisection");
            p[i] = static_cast<std::uint32_t>(*j);
        }
        perms.push_back(std::move(p));
    }
    BisectionOrbits out{orbit_partition(idx.size(), perms, key, skip), {}};
    for (auto r : out.report.representatives) out.representatives.push_back(idx.at(r));
    return out;
}

BisectionOrbits stabiliser_orbits(const Field& f, std::size_t k, std::uint64_t budget) {
    const BisectionIndex& idx = shared_bisections(f, k, budget);
    Bisection b0 = coordinate_bisection(f, k);
    return orbits_on_bisections(bisection_stabiliser_generators(b0), idx, idx.index_of(b0));
}

OrbitReport orbits_on_flags(const GeneratorSet& g, const ProjParams& p, std::uint64_t budget) {
    const SubspaceTable& pts = shared_table(p.field, p.n, p.m, budget);
    const SubspaceTable& lines = shared_table(p.field, p.n, p.k, budget);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> flags;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto d = lines.intersection_dims(pts.at(i));
        for (std::size_t j = 0; j < d.size(); ++j)
            if (d[j] == p.j) flags.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        if (flags.size() > budget) throw Error(Errc::TooLarge, "flag set exceeds the budget");
    }
    const auto pk = subspace_order_key(pts), lk = subspace_order_key(lines);
    std::vector<std::uint64_t> key(flags.size());
    for (std::size_t i = 0; i < flags.size(); ++i) key[i] = pk[flags[i].first] * lines.size() + lk[flags[i].second];
    std::vector<std::vector<std::uint32_t>> perms;
    for (const Mat& x : g.generators) {
        auto pp = pts.permutation(x), lp = lines.permutation(x);
        std::vector<std::uint32_t> perm(flags.size());
        for (std::size_t i = 0; i < flags.size(); ++i) {
            auto img = std::make_pair(pp[flags[i].first], lp[flags[i].second]);
            auto it = std::lower_bound(flags.begin(), flags.end(), img);
            if (it == flags.end() || *it != img) throw Error(Errc::NotFound, "image of a flag is not a flag");
            perm[i] = static_cast<std::uint32_t>(it - flags.begin());
        }
        perms.push_back(std::move(perm));
    }
    return orbit_partition(flags.size(), perms, key);
}

ParabolicOrbits pm_orbits_on_k_spaces(std::size_t n, std::size_t m, std::size_t k, const Field& f,
                                      std::uint64_t budget) {
    if (m < 1 || m >= n || k < 1 || k >= n) throw Error(Errc::BadParams, "need 1 <= m, k < n");
    std::vector<std::size_t> first(m);
    std::iota(first.begin(), first.end(), std::size_t{0});
    Subspace u = Subspace::coordinate(f, n, first);
    const SubspaceTable& t = shared_table(f, n, k, budget);
    ParabolicOrbits out{orbits_on_subspaces(subspace_stabiliser_generators(u), t), {}, true};
    auto d = t.intersection_dims(u);
    out.meet_dim.assign(out.report.count(), 0);
    std::map<std::size_t, std::uint32_t> orbit_of_dim;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::uint32_t o = out.report.orbit_of[i];
        out.meet_dim[o] = d[out.report.representatives[o]];
        if (d[i] != out.meet_dim[o]) out.classes_match_meet = false;
        auto [it, fresh] = orbit_of_dim.emplace(d[i], o);
        if (!fresh && it->second != o) out.classes_match_meet = false;
    }
    return out;
}

std::string multiset_text(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (i) os << ' ';
        os << v[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

std::vector<std::uint64_t> parse_multiset(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::uint64_t> out;
    std::string tok;
    while (is >> tok) {
        std::size_t caret = tok.find('^');
        try {
            std::size_t used = 0;
            std::uint64_t value = std::stoull(tok.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? tok.size() : caret)) throw std::invalid_argument(tok);
            std::uint64_t mult = 1;
            if (caret != std::string::npos) {
                mult = std::stoull(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1 || mult == 0) throw std::invalid_argument(tok);
            }
            out.insert(out.end(), mult, value);
        } catch (const std::logic_error&) {
            throw Error(Errc::Parse, "bad multiset token '" + tok + "'");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<std::uint64_t>> golden_orbit_lengths(std::uint64_t q, std::size_t k,
                                                               const std::string& data_dir) {
    std::ifstream in(data_dir + "/golden/orbits_q" + std::to_string(q) + "_k" + std::to_string(k) + ".txt");
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_multiset(ss.str());
}

}  // namespace trifact
