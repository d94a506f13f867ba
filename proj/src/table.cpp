#include "trifact/table.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "trifact/gf2.hpp"
#include "trifact/simd/bitops.hpp"

namespace trifact {

namespace {

std::uint64_t qpow(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace

std::vector<std::uint64_t> vector_bitmap(const Subspace& s) {
    const Field& f = s.field();
    const std::uint64_t q = f.order();
    const std::size_t n = s.ambient(), d = s.dim();
    const std::uint64_t total = qpow(q, n);
    if (total > SubspaceTable::kBitmapLimit) throw Error(Errc::TooLarge, "bitmap too large");
    std::vector<std::uint64_t> bits((total + 63) / 64, 0);
    std::vector<Elem> coef(d, 0);
    Vec v(n, 0);
    for (;;) {
        std::size_t i = d;
        bool carried = true;
        while (i-- > 0) {
            if (++coef[i] < q) {
                carried = false;
                break;
            }
            coef[i] = 0;
        }
        if (carried) break;
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t r = 0; r < d; ++r) {
            if (!coef[r]) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (s.basis()(r, c)) v[c] = f.add(v[c], f.mul(coef[r], s.basis()(r, c)));
        }
        std::uint64_t idx = 0;
        for (std::size_t c = n; c-- > 0;) idx = idx * q + v[c];
        bits[idx / 64] |= 1ULL << (idx % 64);
    }
    return bits;
}

SubspaceTable::SubspaceTable(const Field& f, std::size_t n, std::size_t k, std::uint64_t budget)
    : field_(f), n_(n), k_(k), elems_(grassmannian(f, n, k, budget)) {
    index_.reserve(elems_.size() * 2);
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i].key(), i);
    const std::uint64_t q = f.order();
    std::uint64_t total = 1;
    bool fits = true;
    for (std::size_t i = 0; i < n; ++i) {
        total *= q;
        if (total > kBitmapLimit) {
            fits = false;
            break;
        }
    }
    if (fits) {
        words_ = (total + 63) / 64;
        bits_.reserve(words_ * elems_.size());
        for (const auto& s : elems_) {
            auto b = vector_bitmap(s);
            bits_.insert(bits_.end(), b.begin(), b.end());
        }
        dim_of_count_.assign(total + 1, 0xff);
        std::uint64_t p = 1;
        for (std::size_t d = 0; d <= n; ++d, p *= q) dim_of_count_[p - 1] = static_cast<std::uint8_t>(d);
    }
}

std::optional<std::size_t> SubspaceTable::find(const Subspace& s) const {
    auto it = index_.find(s.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SubspaceTable::index_of(const Subspace& s) const {
    auto r = find(s);
    if (!r) throw Error(Errc::NotFound, "subspace not in table");
    return *r;
}

std::vector<std::uint8_t> SubspaceTable::intersection_dims(const Subspace& query) const {
    if (query.ambient() != n_ || !(query.field() == field_))
        throw Error(Errc::AmbientMismatch, "query lives in a different space");
    std::vector<std::uint8_t> out(elems_.size());
    if (has_bitmaps()) {
        auto qb = vector_bitmap(query);
        std::vector<std::uint32_t> counts(elems_.size());
        simd::and_popcount_batch(qb.data(), bits_.data(), words_, elems_.size(), counts.data());
        for (std::size_t i = 0; i < counts.size(); ++i) out[i] = dim_of_count_[counts[i]];
    } else {
        for (std::size_t i = 0; i < elems_.size(); ++i)
            out[i] = static_cast<std::uint8_t>(intersection_dim(query, elems_[i]));
    }
    return out;
}

std::vector<std::uint32_t> SubspaceTable::permutation(const Mat& g) const {
    std::vector<std::uint32_t> perm(elems_.size());
    if (field_.order() == 2 && n_ <= 64) {
        Gf2Mat pg = Gf2Mat::from_mat(g);
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            Gf2Mat img = Gf2Mat::from_mat(elems_[i].basis());
            for (auto& r : img.rows) r = gf2_vec_times(r, pg);
            gf2_rref(img);
            perm[i] = static_cast<std::uint32_t>(index_of(Subspace::from_rref(img.to_mat())));
        }
        return perm;
    }
    for (std::size_t i = 0; i < elems_.size(); ++i)
        perm[i] = static_cast<std::uint32_t>(index_of(elems_[i].apply(g)));
    return perm;
}

const SubspaceTable& shared_table(const Field& f, std::size_t n, std::size_t k, std::uint64_t budget) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint64_t, std::size_t, std::size_t>, std::unique_ptr<SubspaceTable>> cache;
    if (gaussian_u64(n, k, f.order()) > budget) throw Error(Errc::TooLarge, "Grassmannian exceeds the budget");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{f.order(), n, k}];
    if (!slot) slot = std::make_unique<SubspaceTable>(f, n, k, budget);
    return *slot;
}

BisectionIndex::BisectionIndex(const Field& f, std::size_t k, std::uint64_t budget) {
    if (bisection_count(k, f.order()) > budget)
        throw Error(Errc::TooLarge, "bisection set exceeds the enumeration budget");
    halves_ = &shared_table(f, 2 * k, k, budget);
    pairs_.reserve(bisection_count(k, f.order()));
    for (std::size_t a = 0; a < halves_->size(); ++a) {
        auto dims = halves_->intersection_dims(halves_->at(a));
        for (std::size_t b = a + 1; b < dims.size(); ++b)
            if (dims[b] == 0) pairs_.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
}

Bisection BisectionIndex::at(std::size_t i) const {
    return Bisection::make(halves_->at(pairs_[i].first), halves_->at(pairs_[i].second));
}

std::optional<std::size_t> BisectionIndex::find(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(a, b));
    if (it == pairs_.end() || *it != std::make_pair(a, b)) return std::nullopt;
    return static_cast<std::size_t>(it - pairs_.begin());
}

std::size_t BisectionIndex::index_of(const Bisection& b) const {
    auto r = find(static_cast<std::uint32_t>(halves_->index_of(b.first)),
                  static_cast<std::uint32_t>(halves_->index_of(b.second)));
    if (!r) throw Error(Errc::NotFound, "bisection not in index");
    return *r;
}

const BisectionIndex& shared_bisections(const Field& f, std::size_t k, std::uint64_t budget) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::size_t>, std::unique_ptr<BisectionIndex>> cache;
    if (bisection_count(k, f.order()) > budget)
        throw Error(Errc::TooLarge, "bisection set exceeds the enumeration budget");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{f.order(), k}];
    if (!slot) slot = std::make_unique<BisectionIndex>(f, k, budget);
    return *slot;
}

}  // namespace trifact
