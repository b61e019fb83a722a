#pragma once

#include <vector>

#include "staircase/common.hpp"
#include "staircase/monomial_ideal.hpp"

namespace staircase {

namespace detail {

/// All exponent vectors of total degree r in n variables, descending lex.
inline void degree_slice(int n, int r, std::vector<Exponent>& out, Exponent& scratch, int pos) {
    if (pos == n - 1) {
        scratch[pos] = r;
        out.push_back(scratch);
        return;
    }
    for (int a = r; a >= 0; --a) {
        scratch[pos] = a;
        degree_slice(n, r - a, out, scratch, pos + 1);
    }
}

inline std::vector<Exponent> monomials_of_degree(int n, int r) {
    std::vector<Exponent> out;
    Exponent scratch(n, 0);
    degree_slice(n, r, out, scratch, 0);
    return out;
}

}  // namespace detail

/// The fat point (x_1, ..., x_n)^r: all monomials of total degree r.
inline MonomialIdeal power_ideal(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("power_ideal: need n >= 1, r >= 1");
    return MonomialIdeal(n, detail::monomials_of_degree(n, r));
}

/// The unique lexsegment ideal of colength d in three variables generated
/// in two consecutive degrees r, r+1: the first t = C(r+3,3) - d lex
/// monomials of degree r plus all of m^{r+1}, where r is determined by
/// C(r+2,3) <= d < C(r+3,3). Lex order uses x > y > z.
inline MonomialIdeal lex_truncation_ideal(long long d) {
    if (d < 1) throw std::invalid_argument("lex_truncation_ideal: need d >= 1");
    int r = 0;
    while (binom(r + 3, 3) <= d) ++r;
    ensure(binom(r + 2, 3) <= d, "lex_truncation_ideal: degree bracket");
    const long long t = binom(r + 3, 3) - d;
    auto gens = detail::monomials_of_degree(3, r);  // already descending lex
    gens.resize(static_cast<std::size_t>(t));
    for (auto& g : detail::monomials_of_degree(3, r + 1)) gens.push_back(std::move(g));
    return MonomialIdeal(3, std::move(gens));
}

/// The family x^2 m^{r-2} + xy (y,z)^{r-2} + (x z^r) + y (y,z)^r + (z^{r+i})
/// of colength C(r+2,3) + r + i + 1; i = 2 is the witness that the
/// lexsegment ideal does not maximize the tangent dimension at its
/// colength.
inline MonomialIdeal counterexample_ideal(int r, int i = 2) {
    if (r < 3) throw std::invalid_argument("counterexample_ideal: need r >= 3");
    if (i < 2 || i > r - 1) throw std::invalid_argument("counterexample_ideal: need 2 <= i <= r-1");
    std::vector<Exponent> gens;
    for (auto& m : detail::monomials_of_degree(3, r - 2))
        gens.push_back({m[0] + 2, m[1], m[2]});
    for (int b = 0; b <= r - 2; ++b)  // xy (y,z)^{r-2}
        gens.push_back({1, 1 + b, r - 2 - b});
    gens.push_back({1, 0, r});
    for (int b = 0; b <= r; ++b)  // y (y,z)^r
        gens.push_back({0, 1 + b, r - b});
    gens.push_back({0, 0, r + i});
    return MonomialIdeal(3, std::move(gens));
}

}  // namespace staircase
