#include "trifact/counts.hpp"

#include "trifact/gfq.hpp"
#include "trifact/table.hpp"

namespace trifact {

namespace {

BigInt big_pow(std::uint64_t q, std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
}

// 1 - q^-i
Rat one_minus(std::uint64_t q, std::size_t i) {
    BigInt d = big_pow(q, i);
    return Rat(d - 1, d);
}

void check_q(std::uint64_t q) {
    if (q < 2) throw Error(Errc::BadRange, "q must be at least 2");
}

}  // namespace

BigInt gaussian(std::size_t n, std::size_t m, std::uint64_t q) {
    if (m > n) return 0;
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < m; ++i) {
        num *= big_pow(q, n - i) - 1;
        den *= big_pow(q, m - i) - 1;
    }
    return num / den;
}

Rat f_value(std::size_t r, std::size_t s, std::uint64_t q) {
    check_q(q);
    if (r < 1 || r > s) throw Error(Errc::BadRange, "need 1 <= r <= s");
    Rat acc = 1;
    for (std::size_t i = r; i <= s; ++i) acc *= one_minus(q, i);
    return acc;
}

Rat h_factor(std::size_t i, std::size_t k, std::uint64_t q) {
    check_q(q);
    Rat x = one_minus(q, i);
    return x * x / one_minus(q, k + i);
}

Rat h_value(std::size_t a, std::size_t k, std::uint64_t q) {
    check_q(q);
    if (a < 1 || a > k) throw Error(Errc::BadRange, "need 1 <= a <= k");
    Rat acc = 1;
    for (std::size_t i = a; i <= k; ++i) acc *= h_factor(i, k, q);
    return acc;
}

bool restricted_movement_sufficient(std::size_t m, std::size_t k, std::uint64_t q) {
    if (m < 1 || m > k) throw Error(Errc::BadRange, "need 1 <= m <= k");
    return h_value(k - m + 1, k, q) > Rat(1, 2);
}

Rat h_lower_bound(std::size_t a, std::size_t k, std::uint64_t q) {
    check_q(q);
    if (a < 2 || a > k) throw Error(Errc::BadRange, "need 2 <= a <= k");
    Rat qa(1, big_pow(q, a));
    Rat first = 2 * qa / one_minus(q, 1);
    Rat second = 2 * qa * qa / ((1 - 2 * qa) * one_minus(q, 2));
    return 1 - first - second;
}

DisjointCount disjoint_count(std::size_t m, std::size_t k, std::uint64_t q, std::uint64_t budget) {
    if (m < 1 || m > k) throw Error(Errc::BadRange, "need 1 <= m <= k");
    Field f = Field::of_order(q);
    const std::size_t n = 2 * k;
    if (gaussian_u64(n, m, q) > budget) throw Error(Errc::TooLarge, "too many m-spaces to enumerate");
    std::vector<std::size_t> lo, hi;
    for (std::size_t i = 0; i < k; ++i) {
        lo.push_back(i);
        hi.push_back(k + i);
    }
    Subspace a = Subspace::coordinate(f, n, lo), b = Subspace::coordinate(f, n, hi);
    SubspaceTable table(f, n, m, budget);
    auto da = table.intersection_dims(a), db = table.intersection_dims(b);
    DisjointCount out;
    out.total = table.size();
    for (std::size_t i = 0; i < table.size(); ++i) out.disjoint += da[i] == 0 && db[i] == 0;
    return out;
}

bool disjoint_count_identity_check(std::size_t m, std::size_t k, std::uint64_t q, std::uint64_t budget) {
    DisjointCount c = disjoint_count(m, k, q, budget);
    Rat lhs = c.ratio();
    Rat f1 = f_value(k - m + 1, k, q);
    return lhs == f1 * f1 / f_value(2 * k - m + 1, 2 * k, q);
}

std::string to_text(const Rat& r) {
    BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal(const Rat& r, unsigned digits) {
    BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = big_pow(10, digits);
    BigInt scaled = (num * scale * 2 + den) / (den * 2);  // round half up
    BigInt whole = scaled / scale, frac = scaled % scale;
    std::string fs = frac.str();
    while (fs.size() < digits) fs = "0" + fs;
    std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
    if (digits) out += "." + fs;
    return out;
}

}  // namespace trifact
