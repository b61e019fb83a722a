#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "staircase/monomial_ideal.hpp"

namespace staircase {

/// Generators and pairwise-lcm relations of a monomial ideal. Not a
/// minimal presentation, but always a presentation, which is all the
/// kernel computation needs.
struct TaylorPresentation {
    struct Relation {
        int a = 0, b = 0;  // generator indices, a < b
        Exponent lcm;
    };
    std::vector<Exponent> generator_degrees;
    std::vector<Relation> relations;
};

inline TaylorPresentation taylor_presentation(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("taylor_presentation: zero ideal has no generators");
    TaylorPresentation pres;
    pres.generator_degrees = ideal.generators();
    const int m = static_cast<int>(pres.generator_degrees.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            pres.relations.push_back(
                {a, b, lcm_exponent(pres.generator_degrees[a], pres.generator_degrees[b])});
    return pres;
}

inline void require_prime(long long p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime");
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument("modulus must be a prime");
}

/// Dense row-major matrix over Z/p with destructive rank computation by
/// Gaussian elimination with partial pivoting.
class GfpMatrix {
public:
    GfpMatrix(long long rows, long long cols, long long p)
        : rows_(rows), cols_(cols), p_(p) {
        require_prime(p);
        if (rows < 0 || cols < 0 || checked_mul(std::max(rows, 1LL), std::max(cols, 1LL)) > kMatrixEntryCap)
            throw BudgetError("matrix exceeds the entry cap");
        a_.assign(static_cast<std::size_t>(rows * cols), 0);
    }

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }

    void add(long long r, long long c, long long v) {
        auto& cell = a_[static_cast<std::size_t>(r * cols_ + c)];
        cell = static_cast<std::int64_t>(((cell + v) % p_ + p_) % p_);
    }

    /// Rank over Z/p; destroys the contents.
    long long rank() {
        long long rank = 0;
        for (long long col = 0; col < cols_ && rank < rows_; ++col) {
            long long pivot = -1;
            for (long long r = rank; r < rows_; ++r) {
                if (at(r, col) != 0) { pivot = r; break; }
            }
            if (pivot < 0) continue;
            swap_rows(pivot, rank);
            const long long inv = mod_inverse(at(rank, col));
            for (long long r = rank + 1; r < rows_; ++r) {
                const long long f = at(r, col);
                if (f == 0) continue;
                const long long scale = p_ - (f * inv) % p_;
                std::int64_t* dst = row(r);
                const std::int64_t* src = row(rank);
                for (long long c = col; c < cols_; ++c)
                    dst[c] = (dst[c] + scale * src[c]) % p_;
            }
            ++rank;
        }
        return rank;
    }

private:
    std::int64_t at(long long r, long long c) const {
        return a_[static_cast<std::size_t>(r * cols_ + c)];
    }
    std::int64_t* row(long long r) { return a_.data() + static_cast<std::size_t>(r * cols_); }
    void swap_rows(long long r1, long long r2) {
        if (r1 == r2) return;
        std::swap_ranges(row(r1), row(r1) + cols_, row(r2));
    }
    long long mod_inverse(long long v) const {
        // Fermat: p prime
        long long result = 1, base = v % p_, e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return result;
    }

    long long rows_, cols_, p_;
    std::vector<std::int64_t> a_;
};

namespace detail {

/// Standard-monomial index of the target quotient, addressable by flat
/// staircase offset.
struct QuotientBasis {
    explicit QuotientBasis(const Staircase& st) : st_(st) {
        const auto& monos = st.standard_monomials();
        index_of_flat_.assign(st.cell_count(), -1);
        for (std::size_t t = 0; t < monos.size(); ++t)
            index_of_flat_[st.flat(monos[t])] = static_cast<long long>(t);
    }

    /// Index of x^e in the standard basis, or -1 when x^e = 0 in S/J.
    long long index(const Exponent& e) const {
        if (st_.contains(e)) return -1;
        return index_of_flat_[st_.flat(e)];
    }

    long long size() const { return st_.colength(); }

private:
    const Staircase& st_;
    std::vector<long long> index_of_flat_;
};

}  // namespace detail

/// dim_k Hom(I, S/J) over Z/p by explicit linear algebra: the kernel of
/// the map sending a tuple of values on the generators to its defects on
/// the pairwise-lcm relations. Multiplication by a monomial permutes the
/// standard basis of S/J into itself or 0, so all entries are +-1 and the
/// answer is the same at every prime.
inline long long hom_dim(const MonomialIdeal& ideal, const MonomialIdeal& target,
                         long long p = 32003) {
    if (ideal.var_count() != target.var_count())
        throw std::invalid_argument("hom_dim: variable counts differ");
    if (ideal.is_zero()) return 0;
    const auto pres = taylor_presentation(ideal);
    Staircase st(target);
    detail::QuotientBasis basis(st);
    const long long m = static_cast<long long>(pres.generator_degrees.size());
    const long long dim = basis.size();
    GfpMatrix mat(static_cast<long long>(pres.relations.size()) * dim, m * dim, p);
    const auto& monos = st.standard_monomials();
    for (std::size_t t = 0; t < pres.relations.size(); ++t) {
        const auto& rel = pres.relations[t];
        const Exponent shift_a = sub_clamped(rel.lcm, pres.generator_degrees[rel.a]);
        const Exponent shift_b = sub_clamped(rel.lcm, pres.generator_degrees[rel.b]);
        Exponent w;
        for (long long u = 0; u < dim; ++u) {
            w = monos[static_cast<std::size_t>(u)];
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += shift_a[i];
            if (long long wi = basis.index(w); wi >= 0)
                mat.add(static_cast<long long>(t) * dim + wi, rel.a * dim + u, 1);
            w = monos[static_cast<std::size_t>(u)];
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += shift_b[i];
            if (long long wi = basis.index(w); wi >= 0)
                mat.add(static_cast<long long>(t) * dim + wi, rel.b * dim + u, -1);
        }
    }
    return m * dim - mat.rank();
}

/// The alpha-graded strand of hom_dim: value slots are the generators
/// whose shift by alpha stays standard, defect slots the relations with
/// the same property.
inline long long hom_dim_graded(const MonomialIdeal& ideal, const MonomialIdeal& target,
                                const MultiDegree& alpha, long long p = 32003) {
    if (ideal.var_count() != target.var_count())
        throw std::invalid_argument("hom_dim_graded: variable counts differ");
    if (static_cast<int>(alpha.size()) != ideal.var_count())
        throw std::invalid_argument("hom_dim_graded: degree length mismatch");
    if (ideal.is_zero()) return 0;
    const auto pres = taylor_presentation(ideal);
    Staircase st(target);
    detail::QuotientBasis basis(st);
    const int n = ideal.var_count();

    auto shifted_index = [&](const Exponent& e) -> long long {
        Exponent u(n);
        for (int i = 0; i < n; ++i) {
            u[i] = e[i] + alpha[i];
            if (u[i] < 0) return -1;
        }
        return basis.index(u);
    };

    std::vector<long long> col_of_gen(pres.generator_degrees.size(), -1);
    long long cols = 0;
    for (std::size_t a = 0; a < pres.generator_degrees.size(); ++a)
        if (shifted_index(pres.generator_degrees[a]) >= 0) col_of_gen[a] = cols++;
    if (cols == 0) return 0;

    std::vector<std::pair<std::size_t, long long>> live_relations;
    for (std::size_t t = 0; t < pres.relations.size(); ++t) {
        if (shifted_index(pres.relations[t].lcm) >= 0)
            live_relations.emplace_back(t, static_cast<long long>(live_relations.size()));
    }

    GfpMatrix mat(static_cast<long long>(live_relations.size()), cols, p);
    for (const auto& [t, r] : live_relations) {
        const auto& rel = pres.relations[t];
        if (col_of_gen[rel.a] >= 0) mat.add(r, col_of_gen[rel.a], 1);
        if (col_of_gen[rel.b] >= 0) mat.add(r, col_of_gen[rel.b], -1);
    }
    return cols - mat.rank();
}

struct LengthIdentityResult {
    long long lhs = 0;  // dim Hom(I, R/J)
    long long rhs = 0;  // len(R/J) + len((I:J)/I)
    bool ok = false;
};

/// The two-variable length identity
/// dim Hom(I, R/J) = len(R/J) + len((I:J)/I), checked with the kernel on
/// the left and staircase counts on the right.
inline LengthIdentityResult two_var_length_identity_check(const MonomialIdeal& ideal,
                                                          const MonomialIdeal& j,
                                                          long long p = 32003) {
    if (ideal.var_count() != 2 || j.var_count() != 2)
        throw std::invalid_argument("two_var_length_identity_check: need 2 variables");
    LengthIdentityResult out;
    out.lhs = hom_dim(ideal, j, p);
    out.rhs = colength(j) + (colength(ideal) - colength(colon(ideal, j)));
    out.ok = out.lhs == out.rhs;
    return out;
}

}  // namespace staircase
