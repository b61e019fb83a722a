#pragma once

#include <array>
#include <vector>

#include "staircase/monomial_ideal.hpp"

namespace staircase {

/// The table b_{i,j} of minimal third-axis exponents: with axis roles
/// (u, v, w), b_{i,j} is the least k such that the monomial with u = i,
/// v = j, w = k lies in the ideal. Zero outside the stored rectangle.
/// Row sums recover the fiber colengths and the full sum the colength.
struct SliceTable {
    std::array<int, 3> axes{0, 1, 2};  // axes[2] is the variable playing z
    int rows = 0, cols = 0;            // table covers [0, rows] x [0, cols]
    std::vector<int> b;                // (rows+1) x (cols+1), row-major

    int at(int i, int j) const {
        if (i < 0 || j < 0) throw std::invalid_argument("SliceTable::at: negative index");
        if (i > rows || j > cols) return 0;
        return b[static_cast<std::size_t>(i) * (cols + 1) + j];
    }

    long long weight() const {
        long long w = 0;
        for (int v : b) w += v;
        return w;
    }
};

/// Computes the slice table of an artinian ideal in three variables under
/// the given axis roles; the identity permutation realizes the usual
/// (x, y, z) table and {0, 2, 1} the one with y as the minimized axis.
inline SliceTable z_slice_table(const MonomialIdeal& ideal, std::array<int, 3> axes = {0, 1, 2}) {
    if (ideal.var_count() != 3) throw std::invalid_argument("z_slice_table: need 3 variables");
    Staircase st(ideal);
    const auto& s = st.pure_powers();
    SliceTable table;
    table.axes = axes;
    table.rows = s[axes[0]];
    table.cols = s[axes[1]];
    table.b.assign(static_cast<std::size_t>(table.rows + 1) * (table.cols + 1), 0);
    Exponent e(3);
    for (int i = 0; i <= table.rows; ++i) {
        for (int j = 0; j <= table.cols; ++j) {
            e[axes[0]] = i;
            e[axes[1]] = j;
            int k = 0;
            while (true) {
                e[axes[2]] = k;
                if (st.contains(e)) break;
                ++k;
            }
            table.b[static_cast<std::size_t>(i) * (table.cols + 1) + j] = k;
        }
    }
    for (int i = 0; i <= table.rows; ++i)
        for (int j = 0; j <= table.cols; ++j)
            ensure(table.at(i, j) >= table.at(i + 1, j) && table.at(i, j) >= table.at(i, j + 1),
                   "slice table must be monotone");
    return table;
}

/// The 2-variable slices of an artinian 3-variable ideal: fiber i holds
/// the exponents (j, k) with (i, j, k) in the staircase. Fibers are
/// nested and the last one is the full ring.
struct FiberDecomposition {
    std::vector<MonomialIdeal> fibers;  // I_0, ..., I_p with I_p the unit ideal
    int full_index = 0;                 // p, the pure x-power exponent
};

inline FiberDecomposition fiber_decomposition(const MonomialIdeal& ideal) {
    if (ideal.var_count() != 3) throw std::invalid_argument("fiber_decomposition: need 3 variables");
    if (!ideal.is_artinian()) throw NotArtinianError("fiber_decomposition: missing a pure power");
    FiberDecomposition out;
    out.full_index = *ideal.pure_power(0);
    for (int i = 0; i <= out.full_index; ++i) {
        std::vector<Exponent> gens;
        for (const auto& g : ideal.generators())
            if (g[0] <= i) gens.push_back({g[1], g[2]});
        out.fibers.emplace_back(2, std::move(gens));
    }
    ensure(out.fibers.back().is_unit(), "last fiber must be the full ring");
    return out;
}

/// Slice profile of a 2-variable artinian ideal I = (+) x^i (y^{b_i}):
/// b_i is the least k with (i, k) in the staircase. Entries run i = 0..s,
/// ending in the 0 of the pure x power.
inline std::vector<int> two_var_slices(const MonomialIdeal& ideal) {
    if (ideal.var_count() != 2) throw std::invalid_argument("two_var_slices: need 2 variables");
    Staircase st(ideal);
    const int s = st.pure_powers()[0];
    std::vector<int> b(static_cast<std::size_t>(s) + 1, 0);
    Exponent e(2);
    for (int i = 0; i <= s; ++i) {
        e[0] = i;
        int k = 0;
        while (true) {
            e[1] = k;
            if (st.contains(e)) break;
            ++k;
        }
        b[i] = k;
    }
    return b;
}

}  // namespace staircase
