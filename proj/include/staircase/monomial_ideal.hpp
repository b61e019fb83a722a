#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "staircase/common.hpp"
#include "staircase/exponent.hpp"

namespace staircase {

/// An artinian-or-not monomial ideal held by its minimal generating set.
/// Generators are stored as a divisibility antichain in descending lex
/// order, so equality of ideals is equality of generator lists. Immutable
/// after construction; safe to share across threads.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Zero ideal in n variables.
    explicit MonomialIdeal(int n) : n_(n) {}

    /// Minimalizes and canonically sorts the given generators.
    MonomialIdeal(int n, std::vector<Exponent> raw) : n_(n) {
        for (const auto& e : raw) {
            if (static_cast<int>(e.size()) != n)
                throw std::invalid_argument("generator length does not match variable count");
            for (int c : e)
                if (c < 0) throw std::invalid_argument("negative exponent in generator");
        }
        std::sort(raw.begin(), raw.end(), lex_greater);
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        // divisibility is not aligned with lex order, so the antichain scan
        // has to drop dominated entries in both directions
        for (const auto& e : raw) {
            bool redundant = false;
            for (const auto& g : gens_) {
                if (divides(g, e)) { redundant = true; break; }
            }
            if (!redundant) {
                std::erase_if(gens_, [&](const Exponent& g) { return divides(e, g); });
                gens_.push_back(e);
            }
        }
        std::sort(gens_.begin(), gens_.end(), lex_greater);
    }

    int var_count() const { return n_; }
    const std::vector<Exponent>& generators() const { return gens_; }
    std::size_t num_generators() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }

    /// True iff 1 is a generator (the full ring).
    bool is_unit() const {
        return !gens_.empty() && degree(gens_.back()) == 0;
    }

    /// Membership of the monomial x^e: some minimal generator divides it.
    bool contains(const Exponent& e) const {
        for (const auto& g : gens_)
            if (divides(g, e)) return true;
        return false;
    }

    /// other is contained in this ideal.
    bool contains_ideal(const MonomialIdeal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    /// Exponent of the pure power of variable i among the generators,
    /// if present (0 for the unit ideal).
    std::optional<int> pure_power(int i) const {
        std::optional<int> best;
        for (const auto& g : gens_) {
            bool pure = true;
            for (int j = 0; j < n_; ++j)
                if (j != i && g[j] != 0) { pure = false; break; }
            if (pure && (!best || g[i] < *best)) best = g[i];
        }
        return best;
    }

    bool is_artinian() const {
        for (int i = 0; i < n_; ++i)
            if (!pure_power(i)) return false;
        return true;
    }

    /// Componentwise max of the generator exponents (zero ideal: all 0).
    Exponent max_generator_exponents() const {
        Exponent g(n_, 0);
        for (const auto& e : gens_)
            for (int i = 0; i < n_; ++i) g[i] = std::max(g[i], e[i]);
        return g;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

private:
    int n_ = 0;
    std::vector<Exponent> gens_;
};

/// Divisibility-antichain of raw generators, canonically sorted.
inline MonomialIdeal minimalize(std::vector<Exponent> raw, int n) {
    return MonomialIdeal(n, std::move(raw));
}

/// Set of standard exponents killed by every variable.
using SocleSet = std::vector<Exponent>;

/// Materialized staircase of an artinian ideal: a dense membership bitmap
/// over the box prod [0, s_i] (s_i = pure-power exponents) plus the list
/// of standard monomials. Any exponent with a coordinate >= s_i is in the
/// ideal, so clamped lookup answers membership for all of N^n in O(1).
class Staircase {
public:
    explicit Staircase(const MonomialIdeal& ideal) : ideal_(ideal), n_(ideal.var_count()) {
        s_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            auto p = ideal.pure_power(i);
            if (!p) throw NotArtinianError("variable " + std::to_string(i + 1) +
                                           " has no pure-power generator");
            s_[i] = *p;
        }
        dims_.resize(n_);
        strides_.resize(n_);
        long long cells = 1;
        for (int i = n_ - 1; i >= 0; --i) {
            dims_[i] = s_[i] + 1;
            strides_[i] = cells;
            cells = checked_mul(cells, dims_[i]);
            if (cells > kStaircaseCellCap)
                throw BudgetError("staircase exceeds the lattice cell cap");
        }
        cells_ = cells;
        build_bitmap();
    }

    const MonomialIdeal& ideal() const { return ideal_; }
    int var_count() const { return n_; }

    /// Pure-power exponents s_i; the standard monomials live in
    /// prod [0, s_i - 1].
    const std::vector<int>& pure_powers() const { return s_; }

    long long colength() const { return static_cast<long long>(standard_.size()); }

    /// Standard monomials in descending lex order (coordinates flattened
    /// n at a time in std_coords()).
    const std::vector<Exponent>& standard_monomials() const { return standard_; }

    /// O(1) membership for any point of N^n.
    bool contains(const Exponent& e) const {
        long long pos = 0;
        for (int i = 0; i < n_; ++i)
            pos += strides_[i] * std::min(e[i], s_[i]);
        return bitmap_[pos] != 0;
    }

    /// Flat offset of an in-box point (every coordinate in [0, s_i]).
    long long flat(const Exponent& e) const {
        long long pos = 0;
        for (int i = 0; i < n_; ++i) pos += strides_[i] * e[i];
        return pos;
    }

    long long cell_count() const { return cells_; }
    const std::vector<long long>& strides() const { return strides_; }

    SocleSet socle() const {
        SocleSet out;
        Exponent up(n_);
        for (const auto& g : standard_) {
            bool in_socle = true;
            for (int i = 0; i < n_ && in_socle; ++i) {
                up = g;
                ++up[i];
                if (!contains(up)) in_socle = false;
            }
            if (in_socle) out.push_back(g);
        }
        return out;
    }

private:
    void build_bitmap() {
        bitmap_.assign(cells_, 0);
        for (const auto& g : ideal_.generators()) bitmap_[flat(g)] = 1;
        // upward closure: a cell is in the staircase iff it is a generator
        // or any predecessor cell is; row-major order visits predecessors
        // first
        Exponent e(n_, 0);
        for (long long pos = 0; pos < cells_; ++pos) {
            if (!bitmap_[pos]) {
                for (int i = 0; i < n_; ++i) {
                    if (e[i] > 0 && bitmap_[pos - strides_[i]]) {
                        bitmap_[pos] = 1;
                        break;
                    }
                }
            }
            // cells on the boundary e_i == s_i are always closed over by the
            // pure power, so whatever is left is a standard monomial
            if (!bitmap_[pos]) standard_.push_back(e);
            for (int i = n_ - 1; i >= 0; --i) {
                if (++e[i] < dims_[i]) break;
                e[i] = 0;
            }
        }
        std::sort(standard_.begin(), standard_.end(), lex_greater);
    }

    MonomialIdeal ideal_;
    int n_;
    std::vector<int> s_;
    std::vector<int> dims_;
    std::vector<long long> strides_;
    long long cells_ = 0;
    std::vector<std::uint8_t> bitmap_;
    std::vector<Exponent> standard_;
};

/// Number of standard monomials, dim_k(S/I).
inline long long colength(const MonomialIdeal& ideal) {
    return Staircase(ideal).colength();
}

inline std::vector<Exponent> standard_monomials(const MonomialIdeal& ideal) {
    return Staircase(ideal).standard_monomials();
}

inline SocleSet socle(const MonomialIdeal& ideal) {
    return Staircase(ideal).socle();
}

/// Intersection of two monomial ideals: pairwise lcm of generators.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Exponent> gens;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators())
            gens.push_back(lcm_exponent(ga, gb));
    return MonomialIdeal(a.var_count(), std::move(gens));
}

/// Colon by a single monomial: shift every generator down by e, clamped.
inline MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Exponent& e) {
    std::vector<Exponent> gens;
    gens.reserve(ideal.num_generators());
    for (const auto& g : ideal.generators()) gens.push_back(sub_clamped(g, e));
    return MonomialIdeal(ideal.var_count(), std::move(gens));
}

/// I : J, as the intersection of the colons by the generators of J.
/// J zero yields the unit ideal (everything multiplies 0 into I).
inline MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& j) {
    if (ideal.var_count() != j.var_count())
        throw std::invalid_argument("colon: variable counts differ");
    if (j.is_zero())
        return MonomialIdeal(ideal.var_count(), {Exponent(ideal.var_count(), 0)});
    bool first = true;
    MonomialIdeal acc;
    for (const auto& g : j.generators()) {
        MonomialIdeal q = colon_by_monomial(ideal, g);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

/// Exchange condition checked on the minimal generators: for every
/// generator with a positive exponent on x_j, moving one unit of x_j onto
/// any earlier variable stays inside the ideal. The generator check
/// implies the condition for all monomials of the ideal (a monomial is a
/// generator times x^c, and the exchanged monomial keeps that cofactor).
inline bool is_strongly_stable(const MonomialIdeal& ideal) {
    const int n = ideal.var_count();
    Exponent moved(n);
    for (const auto& g : ideal.generators()) {
        for (int j = 1; j < n; ++j) {
            if (g[j] == 0) continue;
            for (int i = 0; i < j; ++i) {
                moved = g;
                --moved[j];
                ++moved[i];
                if (!ideal.contains(moved)) return false;
            }
        }
    }
    return true;
}

}  // namespace staircase
