#pragma once

// Exact counting: Gaussian binomials and the F / H products, in
// arbitrary-precision rationals.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace trifact {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

BigInt gaussian(std::size_t n, std::size_t m, std::uint64_t q);

// prod_{i=r}^{s} (1 - q^-i). BadRange unless 1 <= r <= s.
Rat f_value(std::size_t r, std::size_t s, std::uint64_t q);
// prod_{i=a}^{k} (1 - q^-i)^2 / (1 - q^-(k+i)). BadRange unless 1 <= a <= k.
Rat h_value(std::size_t a, std::size_t k, std::uint64_t q);
// One factor of h_value.
Rat h_factor(std::size_t i, std::size_t k, std::uint64_t q);
// H(k-m+1, k, q) > 1/2.
bool restricted_movement_sufficient(std::size_t m, std::size_t k, std::uint64_t q);
// 1 - 2q^-a/(1-q^-1) - 2q^-2a/((1-2q^-a)(1-q^-2)). BadRange unless 2 <= a <= k.
Rat h_lower_bound(std::size_t a, std::size_t k, std::uint64_t q);

struct DisjointCount {
    std::uint64_t disjoint = 0;  // m-spaces meeting both coordinate halves trivially
    std::uint64_t total = 0;     // all m-spaces of V(2k)
    Rat ratio() const { return Rat(disjoint) / Rat(total); }
};

// TooLarge when the m-spaces of V(2k,q) exceed the budget.
DisjointCount disjoint_count(std::size_t m, std::size_t k, std::uint64_t q, std::uint64_t budget = 10'000'000);
// disjoint/total == F(k-m+1,k,q)^2 / F(2k-m+1,2k,q).
bool disjoint_count_identity_check(std::size_t m, std::size_t k, std::uint64_t q,
                                   std::uint64_t budget = 10'000'000);

std::string to_text(const Rat& r);
// Rounded to `digits` places after the point.
std::string to_decimal(const Rat& r, unsigned digits = 6);

}  // namespace trifact
