#include "trifact/gfq.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>

namespace trifact {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::DegreeZero: return "DegreeZero";
        case Errc::Singular: return "Singular";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::AmbientMismatch: return "AmbientMismatch";
        case Errc::NotInAmbient: return "NotInAmbient";
        case Errc::NotContained: return "NotContained";
        case Errc::BadDimensions: return "BadDimensions";
        case Errc::BadParams: return "BadParams";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NoSuchPair: return "NoSuchPair";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::PredicateFails: return "PredicateFails";
        case Errc::UnimplementedCase: return "UnimplementedCase";
        case Errc::NotPairwiseDisjoint: return "NotPairwiseDisjoint";
        case Errc::NotFound: return "NotFound";
        case Errc::BaseCaseMissing: return "BaseCaseMissing";
        case Errc::BadRange: return "BadRange";
        case Errc::BadSubsets: return "BadSubsets";
        case Errc::DegenerateGeometry: return "DegenerateGeometry";
        case Errc::Parse: return "Parse";
        case Errc::CertificationFailed: return "CertificationFailed";
    }
    return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 k, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (k) {
        if (k & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        k >>= 1;
    }
    return r;
}

// polynomials over GF(p), low to high, trimmed
using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, u64 p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 lead_inv = powmod(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        u64 c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            u64 s = mulmod(c, m[i], p);
            a[shift + i] = (a[shift + i] + p - s) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly a, u64 k, const Poly& m, u64 p) {
    Poly r{1};
    a = poly_mod(a, m, p);
    while (k) {
        if (k & 1) r = poly_mulmod(r, a, m, p);
        a = poly_mulmod(a, a, m, p);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> f;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Rabin's test.
bool is_irreducible_mod_p(const std::vector<u64>& poly, u64 p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const u64 deg = f.size() - 1;
    if (deg == 1) return true;
    Poly x{0, 1};
    auto frob_iter = [&](u64 times) {
        Poly r = x;
        for (u64 i = 0; i < times; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    if (!poly_sub(frob_iter(deg), x, p).empty()) return false;
    for (u64 r : prime_factors(deg)) {
        Poly g = poly_gcd(f, poly_sub(frob_iter(deg / r), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

namespace detail {

enum class Kind { Table, Log, Prime, Poly };

struct FieldImpl {
    u64 p = 2;
    unsigned e = 1;
    u64 q = 2;
    Poly modulus;  // monic, size e + 1
    Kind kind = Kind::Prime;

    // Table kind
    std::vector<std::uint8_t> add_t, mul_t, neg_t, inv_t;
    // Log kind
    std::vector<std::uint32_t> log_t, exp_t;

    std::vector<u64> digits(u64 a) const {
        std::vector<u64> d(e);
        for (unsigned i = 0; i < e; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }
    u64 undigits(const std::vector<u64>& d) const {
        u64 a = 0;
        for (unsigned i = e; i-- > 0;) a = a * p + (i < d.size() ? d[i] : 0);
        return a;
    }

    u64 add_raw(u64 a, u64 b) const {
        if (e == 1) {
            u64 s = a + b;
            return s >= p ? s - p : s;
        }
        if (p == 2) return a ^ b;
        u64 r = 0, scale = 1;
        for (unsigned i = 0; i < e; ++i) {
            u64 s = a % p + b % p;
            if (s >= p) s -= p;
            r += s * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        return r;
    }
    u64 neg_raw(u64 a) const {
        if (e == 1) return a == 0 ? 0 : p - a;
        if (p == 2) return a;
        u64 r = 0, scale = 1;
        for (unsigned i = 0; i < e; ++i) {
            u64 d = a % p;
            r += (d == 0 ? 0 : p - d) * scale;
            scale *= p;
            a /= p;
        }
        return r;
    }
    u64 mul_poly(u64 a, u64 b) const {
        if (e == 1) return mulmod(a, b, p);
        Poly pa = digits(a), pb = digits(b);
        trim(pa);
        trim(pb);
        Poly r = poly_mulmod(pa, pb, modulus, p);
        r.resize(e, 0);
        return undigits(r);
    }
    u64 pow_poly(u64 a, u64 k) const {
        u64 r = 1;
        while (k) {
            if (k & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            k >>= 1;
        }
        return r;
    }

    u64 add(u64 a, u64 b) const {
        if (kind == Kind::Table) return add_t[a * q + b];
        return add_raw(a, b);
    }
    u64 neg(u64 a) const {
        if (kind == Kind::Table) return neg_t[a];
        return neg_raw(a);
    }
    u64 mul(u64 a, u64 b) const {
        switch (kind) {
            case Kind::Table: return mul_t[a * q + b];
            case Kind::Log: {
                if (a == 0 || b == 0) return 0;
                u64 s = static_cast<u64>(log_t[a]) + log_t[b];
                if (s >= q - 1) s -= q - 1;
                return exp_t[s];
            }
            case Kind::Prime: return mulmod(a, b, p);
            case Kind::Poly: return mul_poly(a, b);
        }
        return 0;
    }
    u64 inv(u64 a) const {
        if (a == 0) throw Error(Errc::Singular, "inverse of zero");
        switch (kind) {
            case Kind::Table: return inv_t[a];
            case Kind::Log: return exp_t[(q - 1 - log_t[a]) % (q - 1)];
            case Kind::Prime: return powmod(a, p - 2, p);
            case Kind::Poly: return pow_poly(a, q - 2);
        }
        return 0;
    }
};

}  // namespace detail

Field Field::make(u64 p, unsigned e) {
    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, std::shared_ptr<const detail::FieldImpl>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, e}); it != cache.end()) return Field(it->second);
    }
    Field f = build(p, e);
    std::lock_guard lock(mu);
    cache.emplace(std::make_pair(p, e), f.impl_);
    return f;
}

Field Field::build(u64 p, unsigned e) {
    if (e == 0) throw Error(Errc::DegreeZero, "field degree must be positive");
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p >= (1ULL << 62)) throw Error(Errc::TooLarge, "characteristic too large");
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q > (1ULL << 62) / p) throw Error(Errc::TooLarge, "field order exceeds 2^62");
        q *= p;
    }
    auto impl = std::make_shared<detail::FieldImpl>();
    impl->p = p;
    impl->e = e;
    impl->q = q;

    // least monic irreducible: smallest code of the lower coefficients
    u64 lower_count = q;
    for (u64 code = 0; code < lower_count; ++code) {
        Poly f(e + 1, 0);
        u64 c = code;
        for (unsigned i = 0; i < e; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[e] = 1;
        if (e > 1 && f[0] == 0) continue;
        if (is_irreducible_mod_p(f, p)) {
            impl->modulus = f;
            break;
        }
    }

    if (q <= 256) {
        impl->kind = detail::Kind::Table;
        impl->add_t.resize(q * q);
        impl->mul_t.resize(q * q);
        impl->neg_t.resize(q);
        impl->inv_t.resize(q, 0);
        for (u64 a = 0; a < q; ++a) {
            impl->neg_t[a] = static_cast<std::uint8_t>(impl->neg_raw(a));
            for (u64 b = 0; b < q; ++b) {
                impl->add_t[a * q + b] = static_cast<std::uint8_t>(impl->add_raw(a, b));
                impl->mul_t[a * q + b] = static_cast<std::uint8_t>(impl->mul_poly(a, b));
            }
        }
        for (u64 a = 1; a < q; ++a)
            for (u64 b = 1; b < q; ++b)
                if (impl->mul_t[a * q + b] == 1) impl->inv_t[a] = static_cast<std::uint8_t>(b);
    } else if (e == 1) {
        impl->kind = detail::Kind::Prime;
    } else if (q <= (1ULL << 16)) {
        // find a generator, then tabulate logs
        std::vector<u64> fac = prime_factors(q - 1);
        u64 g = 2;
        for (;; ++g) {
            bool ok = true;
            for (u64 r : fac)
                if (impl->pow_poly(g, (q - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
        impl->log_t.assign(q, 0);
        impl->exp_t.assign(q - 1, 0);
        u64 x = 1;
        for (u64 i = 0; i < q - 1; ++i) {
            impl->exp_t[i] = static_cast<std::uint32_t>(x);
            impl->log_t[x] = static_cast<std::uint32_t>(i);
            x = impl->mul_poly(x, g);
        }
        impl->kind = detail::Kind::Log;
    } else {
        impl->kind = detail::Kind::Poly;
    }
    return Field(std::move(impl));
}

Field Field::of_order(u64 q) {
    if (q < 2) throw Error(Errc::NotPrime, "field order must be a prime power");
    u64 p = 0;
    for (u64 d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return make(q, 1);
    unsigned e = 0;
    u64 r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    return make(p, e);
}

u64 Field::p() const { return impl_->p; }
unsigned Field::degree() const { return impl_->e; }
u64 Field::order() const { return impl_->q; }
const std::vector<u64>& Field::modulus() const { return impl_->modulus; }
Elem Field::add(Elem a, Elem b) const { return impl_->add(a, b); }
Elem Field::neg(Elem a) const { return impl_->neg(a); }
Elem Field::sub(Elem a, Elem b) const { return impl_->add(a, impl_->neg(b)); }
Elem Field::mul(Elem a, Elem b) const { return impl_->mul(a, b); }
Elem Field::inv(Elem a) const { return impl_->inv(a); }

Elem Field::pow(Elem a, u64 k) const {
    Elem r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

Elem Field::primitive() const {
    const u64 q = order();
    if (q == 2) return 1;
    std::vector<u64> fac = prime_factors(q - 1);
    for (Elem g = 2; g < q; ++g) {
        bool ok = true;
        for (u64 r : fac)
            if (pow(g, (q - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error(Errc::NotFound, "no primitive element");
}

// ---------------------------------------------------------------- matrices

Mat Mat::identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "row length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] >= f.order()) throw Error(Errc::Parse, "entry out of range");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

void Mat::append_row(const Vec& v) {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "row length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + cols_, row(b));
}

std::strong_ordering operator<=>(const Mat& a, const Mat& b) {
    if (auto c = a.field_ <=> b.field_; c != 0) return c;
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                  b.data_.end());
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matrix product shapes");
    const Field& f = a.field();
    Mat r(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Elem x = a(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j)) r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
        }
    return r;
}

Mat transpose(const Mat& m) {
    Mat t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw Error(Errc::DimensionMismatch, "vstack widths");
    Mat r(a.field(), a.rows() + b.rows(), a.cols());
    std::copy(a.data().begin(), a.data().end(), r.row(0));
    if (b.rows()) std::copy(b.data().begin(), b.data().end(), r.row(a.rows()));
    return r;
}

Vec vec_times_mat(const Vec& v, const Mat& m) {
    if (v.size() != m.rows()) throw Error(Errc::DimensionMismatch, "vector length");
    const Field& f = m.field();
    Vec r(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k]) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(k, j)) r[j] = f.add(r[j], f.mul(v[k], m(k, j)));
    }
    return r;
}

Rref rref(const Mat& in) {
    Mat m = in;
    const Field& f = m.field();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t s = r;
        while (s < m.rows() && m(s, c) == 0) ++s;
        if (s == m.rows()) continue;
        m.swap_rows(r, s);
        Elem iv = f.inv(m(r, c));
        if (iv != 1)
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), iv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Elem factor = f.neg(m(i, c));
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j)) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    Mat out(f, r, m.cols());
    if (r) std::copy(m.row(0), m.row(0) + r * m.cols(), out.row(0));
    return Rref{std::move(out), std::move(piv)};
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Mat kernel(const Mat& m) {
    const Field& f = m.field();
    Rref rr = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : rr.pivots) is_piv[p] = true;
    Mat k(f, 0, m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_piv[c]) continue;
        Vec v(m.cols(), 0);
        v[c] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = f.neg(rr.reduced(i, c));
        k.append_row(v);
    }
    return rref(k).reduced;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    const Field& f = m.field();
    Mat aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref rr = rref(aug);
    if (rr.rank() < n || rr.pivots[n - 1] != n - 1) throw Error(Errc::Singular, "matrix is singular");
    Mat inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

std::string to_text(const Mat& m) {
    std::ostringstream os;
    os << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

Mat mat_from_text(std::istream& in) {
    u64 q = 0;
    std::size_t rows = 0, cols = 0;
    if (!(in >> q >> rows >> cols)) throw Error(Errc::Parse, "expected 'q rows cols' header");
    Field f = Field::of_order(q);
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            u64 x;
            if (!(in >> x)) throw Error(Errc::Parse, "truncated matrix");
            if (x >= q) throw Error(Errc::Parse, "entry out of range");
            m(i, j) = x;
        }
    return m;
}

Mat mat_from_text(const std::string& s) {
    std::istringstream is(s);
    return mat_from_text(is);
}

}  // namespace trifact
