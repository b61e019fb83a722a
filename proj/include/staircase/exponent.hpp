#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "staircase/common.hpp"

namespace staircase {

/// Exponent vector of a monomial: n nonnegative integers.
using Exponent = std::vector<int>;

/// A Z^n grading degree; coordinates may be negative.
using MultiDegree = std::vector<int>;

/// Signature pattern: one char per variable, 'p' (>= 0) or 'n' (< 0),
/// never constant.
using Signature = std::string;

inline long long degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0LL);
}

/// omega(a): coordinate sum.
inline long long omega(const MultiDegree& a) {
    return std::accumulate(a.begin(), a.end(), 0LL);
}

/// Componentwise max(a, 0); the unique decomposition a = a+ - a- with
/// disjoint supports.
inline Exponent positive_part(const MultiDegree& a) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], 0);
    return r;
}

inline Exponent negative_part(const MultiDegree& a) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(-a[i], 0);
    return r;
}

/// True iff x^a divides x^b, i.e. a <= b componentwise.
inline bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponent lcm_exponent(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

/// max(a - b, 0) componentwise; the generator shift behind I : x^b.
inline Exponent sub_clamped(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i] - b[i], 0);
    return r;
}

/// Pure lexicographic order with x1 > x2 > ... ; returns true when a > b.
inline bool lex_greater(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

/// p/n pattern of a multidegree, or nullopt when the pattern is constant
/// (all-p or all-n carry no tangent directions).
inline std::optional<Signature> signature_of(const MultiDegree& a) {
    Signature s(a.size(), 'p');
    bool any_p = false, any_n = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0) { s[i] = 'n'; any_n = true; }
        else any_p = true;
    }
    if (!any_p || !any_n) return std::nullopt;
    return s;
}

/// All 2^n - 2 non-constant signatures, lexicographically ('n' < 'p').
inline std::vector<Signature> all_signatures(int n) {
    std::vector<Signature> out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Signature s(n, 'p');
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s[i] = 'n';
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace staircase
