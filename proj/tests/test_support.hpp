#pragma once

// Shared helpers for the test suites. The oracles here are deliberately
// written against different mathematics than the library paths they
// check (generating functions instead of lattice walks, raw generator
// scans instead of bitmaps).

#include <random>
#include <vector>

#include "staircase/census.hpp"
#include "staircase/families.hpp"
#include "staircase/monomial_ideal.hpp"

namespace test_support {

/// Coefficients of prod_k 1/(1-x^k)^(weights(k)) up to degree d_max:
/// weights(k) = 1 counts partitions, weights(k) = k plane partitions.
inline std::vector<long long> euler_product_counts(int d_max, bool plane) {
    std::vector<long long> coeff(static_cast<std::size_t>(d_max) + 1, 0);
    coeff[0] = 1;
    for (int k = 1; k <= d_max; ++k) {
        const int reps = plane ? k : 1;
        for (int rep = 0; rep < reps; ++rep)
            for (int d = k; d <= d_max; ++d) coeff[d] += coeff[d - k];
    }
    return coeff;
}

/// Exchange check over every lattice cell of the pure-power box, using
/// only the generator scan. Violations outside the box are impossible
/// (some coordinate is at or above its pure power before and after the
/// exchange), so this really is the full-staircase condition.
inline bool strongly_stable_full_check(const staircase::MonomialIdeal& ideal) {
    const int n = ideal.var_count();
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) {
        auto p = ideal.pure_power(i);
        if (!p) throw staircase::NotArtinianError("full check needs an artinian ideal");
        s[i] = *p;
    }
    staircase::Exponent e(n, 0), moved(n);
    while (true) {
        if (ideal.contains(e)) {
            for (int j = 1; j < n; ++j) {
                if (e[j] == 0) continue;
                for (int i = 0; i < j; ++i) {
                    moved = e;
                    --moved[j];
                    ++moved[i];
                    if (!ideal.contains(moved)) return false;
                }
            }
        }
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++e[i] <= s[i]) break;
            e[i] = 0;
        }
        if (i < 0) return true;
    }
}

/// Random artinian ideal with colength in [1, max_colength]: random pure
/// powers plus a handful of random mixed generators, rejection-sampled on
/// the colength. Deterministic for a fixed generator state.
inline staircase::MonomialIdeal random_artinian_ideal(std::mt19937& rng, int n,
                                                      long long max_colength) {
    std::uniform_int_distribution<int> power(2, 8);
    std::uniform_int_distribution<int> extra_count(n, 4 * n);
    while (true) {
        std::vector<staircase::Exponent> gens;
        std::vector<int> s(n);
        for (int i = 0; i < n; ++i) {
            s[i] = power(rng);
            staircase::Exponent pure(n, 0);
            pure[i] = s[i];
            gens.push_back(pure);
        }
        const int extras = extra_count(rng);
        for (int k = 0; k < extras; ++k) {
            staircase::Exponent e(n);
            for (int i = 0; i < n; ++i)
                e[i] = std::uniform_int_distribution<int>(0, s[i] - 1)(rng);
            if (staircase::degree(e) == 0) continue;
            gens.push_back(e);
        }
        staircase::MonomialIdeal ideal(n, std::move(gens));
        if (ideal.is_unit()) continue;
        const long long d = staircase::colength(ideal);
        if (d >= 1 && d <= max_colength) return ideal;
    }
}

}  // namespace test_support
