#pragma once

#include <map>
#include <utility>
#include <vector>

#include "staircase/decomposition.hpp"
#include "staircase/exponent.hpp"
#include "staircase/monomial_ideal.hpp"

namespace staircase {

/// One connected piece of (staircase + alpha) \ staircase, restricted to
/// N^n. Pieces that escape N^n through a face are unbounded and carry no
/// tangent directions.
struct ComponentSet {
    std::vector<Exponent> points;
    bool bounded = false;
};

struct GradedTangent {
    long long count = 0;  // number of bounded components
    std::vector<ComponentSet> components;
};

/// Inclusive per-coordinate bounds [-G_i, s_i - 1] containing every
/// multidegree with a nonzero graded tangent piece: a nonzero piece at
/// degree alpha sends some minimal generator g to a standard monomial
/// g + alpha, forcing alpha_i >= -g_i >= -G_i and (g + alpha)_i < s_i with
/// g_i >= 0, hence alpha_i <= s_i - 1.
struct DegreeBox {
    std::vector<int> lo, hi;

    bool contains(const MultiDegree& a) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (a[i] < lo[i] || a[i] > hi[i]) return false;
        return true;
    }

    long long volume() const {
        long long v = 1;
        for (std::size_t i = 0; i < lo.size(); ++i)
            v *= std::max(0, hi[i] - lo[i] + 1);
        return v;
    }
};

inline DegreeBox degree_box(const MonomialIdeal& ideal) {
    Staircase st(ideal);  // validates artinian
    const auto g = ideal.max_generator_exponents();
    DegreeBox box;
    box.lo.resize(ideal.var_count());
    box.hi.resize(ideal.var_count());
    for (int i = 0; i < ideal.var_count(); ++i) {
        box.lo[i] = -g[i];
        box.hi[i] = st.pure_powers()[i] - 1;
    }
    return box;
}

/// Component counter for one ideal. Reuses stamped scratch buffers across
/// multidegrees, so a single instance is not thread-safe; independent
/// instances over the same (immutable) ideal are.
class TangentEngine {
public:
    explicit TangentEngine(const Staircase& st)
        : st_(st), n_(st.var_count()) {
        const auto& std_monos = st.standard_monomials();
        d_ = static_cast<long long>(std_monos.size());
        coords_.reserve(std_monos.size() * n_);
        flats_.reserve(std_monos.size());
        for (const auto& m : std_monos) {
            coords_.insert(coords_.end(), m.begin(), m.end());
            flats_.push_back(st.flat(m));
        }
        pos_stamp_.assign(st.cell_count(), 0);
        pos_index_.assign(st.cell_count(), 0);
        cand_.reserve(std_monos.size());
        queue_.reserve(std_monos.size());
    }

    /// (number of bounded components, number of bounded singletons).
    std::pair<long long, long long> count(const MultiDegree& alpha) {
        if (!collect_candidates(alpha)) return {0, 0};
        long long bounded = 0, singletons = 0;
        sweep_components(alpha, [&](long long size, bool is_bounded) {
            if (is_bounded) {
                ++bounded;
                if (size == 1) ++singletons;
            }
        });
        return {bounded, singletons};
    }

    /// Full component sets, for callers that want the points.
    GradedTangent components(const MultiDegree& alpha) {
        GradedTangent out;
        if (!collect_candidates(alpha)) return out;
        std::vector<char> comp_bounded;
        long long comp_count = 0;
        sweep_components(alpha, [&](long long, bool is_bounded) {
            comp_bounded.push_back(is_bounded ? 1 : 0);
            ++comp_count;
        });
        out.components.resize(comp_count);
        for (std::size_t c = 0; c < cand_.size(); ++c) {
            auto& comp = out.components[label_pos_[c]];
            const int* base = coords_.data() + static_cast<std::size_t>(cand_[c]) * n_;
            comp.points.emplace_back(base, base + n_);
        }
        for (long long c = 0; c < comp_count; ++c) {
            out.components[c].bounded = comp_bounded[c] != 0;
            if (out.components[c].bounded) ++out.count;
        }
        return out;
    }

private:
    /// Builds the candidate set {standard gamma : gamma - alpha in the
    /// staircase, inside N^n}; returns false when empty.
    bool collect_candidates(const MultiDegree& alpha) {
        cand_.clear();
        ++stamp_;
        Exponent beta(n_);
        for (long long t = 0; t < d_; ++t) {
            const int* c = coords_.data() + static_cast<std::size_t>(t) * n_;
            bool ok = true;
            for (int i = 0; i < n_; ++i) {
                const int b = c[i] - alpha[i];
                if (b < 0) { ok = false; break; }
                beta[i] = b;
            }
            if (!ok || !st_.contains(beta)) continue;
            pos_stamp_[flats_[t]] = stamp_;
            pos_index_[flats_[t]] = static_cast<int>(cand_.size());
            cand_.push_back(static_cast<int>(t));
        }
        return !cand_.empty();
    }

    /// Labels candidates into 1-norm-adjacency components and reports
    /// (size, bounded) per component. A component is unbounded exactly
    /// when some member gamma with gamma_i = 0 has gamma - e_i - alpha in
    /// the staircase: that neighbor lies in the shifted region outside
    /// N^n, and from a point with a negative coordinate the region runs
    /// off to infinity along the other axes.
    template <typename Fn>
    void sweep_components(const MultiDegree& alpha, Fn&& per_component) {
        const auto& strides = st_.strides();
        const auto& s = st_.pure_powers();
        label_pos_.assign(cand_.size(), -1);
        int next_label = 0;
        Exponent nu(n_);
        for (std::size_t seed = 0; seed < cand_.size(); ++seed) {
            if (label_pos_[seed] != -1) continue;
            const int label = next_label++;
            long long size = 0;
            bool bounded = true;
            queue_.clear();
            queue_.push_back(static_cast<int>(seed));
            label_pos_[seed] = label;
            while (!queue_.empty()) {
                const int cur = queue_.back();
                queue_.pop_back();
                ++size;
                const int t = cand_[cur];
                const int* c = coords_.data() + static_cast<std::size_t>(t) * n_;
                const long long pos = flats_[t];
                for (int i = 0; i < n_; ++i) {
                    if (c[i] + 1 < s[i]) {
                        const long long np = pos + strides[i];
                        if (pos_stamp_[np] == stamp_) visit(pos_index_[np], label);
                    }
                    if (c[i] > 0) {
                        const long long np = pos - strides[i];
                        if (pos_stamp_[np] == stamp_) visit(pos_index_[np], label);
                    } else if (bounded && alpha[i] < 0) {
                        // gamma_i = 0; the outside neighbor gamma - e_i is in
                        // the shifted region iff gamma - e_i - alpha is in the
                        // staircase
                        for (int k = 0; k < n_; ++k) nu[k] = c[k] - alpha[k];
                        --nu[i];
                        if (st_.contains(nu)) bounded = false;
                    }
                }
            }
            per_component(size, bounded);
        }
    }

    void visit(int cand_index, int label) {
        if (label_pos_[cand_index] == -1) {
            label_pos_[cand_index] = label;
            queue_.push_back(cand_index);
        }
    }

    const Staircase& st_;
    int n_;
    long long d_ = 0;
    std::vector<int> coords_;
    std::vector<long long> flats_;
    std::vector<int> pos_stamp_;
    std::vector<int> pos_index_;
    int stamp_ = 0;
    std::vector<int> cand_;
    std::vector<int> label_pos_;
    std::vector<int> queue_;
};

/// Bounded connected components of the alpha-shifted staircase
/// difference; their count is the graded tangent dimension at alpha.
inline GradedTangent graded_tangent_dim(const MonomialIdeal& ideal, const MultiDegree& alpha) {
    if (static_cast<int>(alpha.size()) != ideal.var_count())
        throw std::invalid_argument("graded_tangent_dim: degree length mismatch");
    Staircase st(ideal);
    TangentEngine engine(st);
    return engine.components(alpha);
}

/// Everything the tangent space of one monomial point decomposes into:
/// graded dimensions, signature totals, x-degree slices, duality slice
/// pairs, and the socle dimension. Serialization is stable: maps are
/// ordered.
struct TangentReport {
    MonomialIdeal ideal;
    int n = 0;
    long long d = 0;
    std::map<MultiDegree, long long> per_degree;
    std::map<Signature, long long> signature_totals;
    long long total = 0;
    long long socle_dim = 0;
    std::map<int, long long> x_degree_slices;
    std::map<std::pair<int, int>, std::pair<long long, long long>> slice_pairs;
};

inline TangentReport tangent_report(const MonomialIdeal& ideal) {
    const int n = ideal.var_count();
    if (n < 2) throw std::invalid_argument("tangent_report: need n >= 2");
    Staircase st(ideal);
    TangentEngine engine(st);

    TangentReport rep;
    rep.ideal = ideal;
    rep.n = n;
    rep.d = st.colength();
    if (n <= 6)
        for (const auto& s : all_signatures(n)) rep.signature_totals[s] = 0;

    const auto g = ideal.max_generator_exponents();
    const auto& s = st.pure_powers();
    MultiDegree alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = -g[i];
    long long singleton_total = 0;
    std::map<std::pair<int, int>, long long> xy_sums;

    bool done = rep.d == 0;
    while (!done) {
        int negatives = 0;
        for (int i = 0; i < n; ++i)
            if (alpha[i] < 0) ++negatives;
        if (negatives > 0 && negatives < n) {
            auto [cnt, singles] = engine.count(alpha);
            if (cnt > 0) {
                rep.per_degree[alpha] = cnt;
                rep.signature_totals[*signature_of(alpha)] += cnt;
                rep.total += cnt;
                rep.x_degree_slices[alpha[0]] += cnt;
                if (n == 3) xy_sums[{alpha[0], alpha[1]}] += cnt;
                singleton_total += singles;
            }
        }
#ifndef NDEBUG
        else {
            auto [cnt, singles] = engine.count(alpha);
            ensure(cnt == 0, "constant-signature degree must carry no tangent directions");
        }
#endif
        // odometer over the degree box
        for (int i = n - 1; ; --i) {
            if (i < 0) { done = true; break; }
            if (++alpha[i] <= s[i] - 1) break;
            alpha[i] = -g[i];
        }
    }

    const auto socle_set = st.socle();
    rep.socle_dim = checked_mul(static_cast<long long>(ideal.num_generators()),
                                static_cast<long long>(socle_set.size()));
    ensure(rep.socle_dim == singleton_total,
           "socle dimension disagrees with the singleton component count");

    if (n == 3) {
        const auto table = z_slice_table(ideal);
        for (int i = 0; i <= s[0]; ++i) {
            for (int j = 0; j <= s[1]; ++j) {
                const auto lit = xy_sums.find({i, j});
                const long long lhs = lit == xy_sums.end() ? 0 : lit->second;
                const auto rit = xy_sums.find({-i - 1, -j - 1});
                const long long rhs =
                    table.at(i, j) + (rit == xy_sums.end() ? 0 : rit->second);
                ensure(lhs == rhs, "duality slice pair mismatch");
                rep.slice_pairs[{i, j}] = {lhs, rhs};
            }
        }
    }
    return rep;
}

/// Socle part of the tangent space: one dimension per (minimal generator,
/// socle monomial) pair. The report recomputes the same number as the
/// count of singleton bounded components and cross-checks.
inline long long socle_tangent_dim(const MonomialIdeal& ideal) {
    return tangent_report(ideal).socle_dim;
}

/// Smoothness of a monomial point in three variables: no tangent
/// directions with a doubly-negative signature; equivalently the total is
/// exactly 3d.
inline bool is_smooth_monomial_point(const MonomialIdeal& ideal) {
    if (ideal.var_count() != 3)
        throw std::invalid_argument("is_smooth_monomial_point: need 3 variables");
    auto rep = tangent_report(ideal);
    const bool smooth = rep.signature_totals.at("pnn") == 0 &&
                        rep.signature_totals.at("npn") == 0 &&
                        rep.signature_totals.at("nnp") == 0;
    ensure(smooth == (rep.total == 3 * rep.d),
           "smoothness iff tangent dimension 3d");
    return smooth;
}

/// Sufficient singularity test by generator inspection: a mixed xy, xz,
/// yz generator triple where one generator dominates the matching
/// exponents of the other two yields a socle map with a doubly-negative
/// signature.
inline bool singular_by_generators(const MonomialIdeal& ideal) {
    if (ideal.var_count() != 3)
        throw std::invalid_argument("singular_by_generators: need 3 variables");
    const auto& gens = ideal.generators();
    for (const auto& a : gens) {
        if (!(a[0] > 0 && a[1] > 0 && a[2] == 0)) continue;
        for (const auto& b : gens) {
            if (!(b[0] > 0 && b[2] > 0 && b[1] == 0)) continue;
            for (const auto& c : gens) {
                if (!(c[1] > 0 && c[2] > 0 && c[0] == 0)) continue;
                if ((a[0] >= b[0] && a[1] >= c[1]) ||
                    (b[0] >= a[0] && b[2] >= c[2]) ||
                    (c[1] >= a[1] && c[2] >= b[2]))
                    return true;
            }
        }
    }
    return false;
}

/// Graded tangent dimension of the fat point m^r: zero off the
/// omega = -1 slab, else a single binomial in the negative weight.
inline long long fat_point_graded_dim(int n, int r, const MultiDegree& alpha) {
    if (r < 1) throw std::invalid_argument("fat_point_graded_dim: need r >= 1");
    if (omega(alpha) != -1) return 0;
    const long long wneg = omega(negative_part(alpha));
    if (wneg > r) return 0;
    return binom(n + r - wneg - 1, n - 1);
}

struct FatPointDims {
    long long total = 0;
    std::map<Signature, long long> by_signature;
};

/// Closed forms for the fat point in three variables.
inline FatPointDims fat_point_tangent_dims(int r) {
    if (r < 1) throw std::invalid_argument("fat_point_tangent_dims: need r >= 1");
    FatPointDims out;
    const long long single = binom(r + 3, 4);
    const long long dbl = binom(r + 2, 4);
    out.by_signature["ppn"] = out.by_signature["pnp"] = out.by_signature["npp"] = single;
    out.by_signature["pnn"] = out.by_signature["npn"] = out.by_signature["nnp"] = dbl;
    out.total = checked_mul(binom(r + 2, 2), binom(r + 1, 2));
    ensure(out.total == 3 * single + 3 * dbl, "fat point signature split");
    return out;
}

/// Tangent dimension of the lexsegment ideal of colength
/// C(r+2,3) + r + 3: the socle block plus seven non-socle maps.
inline long long e_ideal_tangent_formula(int r) {
    if (r < 3) throw std::invalid_argument("e_ideal_tangent_formula: need r >= 3");
    return checked_mul(binom(r + 2, 2) + 1, binom(r + 1, 2) + 1) + 7;
}

/// Staircase upper bound for the tangent dimensions with x-degree a1,
/// y-degree a2 and negative z-degree: each bounded component is charged
/// to a distinct inner corner of the slice table at or beyond (a1, a2).
inline long long ppn_upper_bound(const MonomialIdeal& ideal, int a1, int a2) {
    if (a1 < 0 || a2 < 0) throw std::invalid_argument("ppn_upper_bound: need a1, a2 >= 0");
    const auto table = z_slice_table(ideal);
    long long sum = 0;
    for (int i = a1; i <= table.rows; ++i)
        for (int j = a2; j <= table.cols; ++j)
            sum += table.at(i, j) - std::max(table.at(i + 1, j), table.at(i, j + 1));
    return sum;
}

/// The two sides of the slice duality at every (i, j) in the staircase
/// support; equal by construction (the report checks).
inline std::map<std::pair<int, int>, std::pair<long long, long long>>
duality_slice_pairs(const MonomialIdeal& ideal) {
    if (ideal.var_count() != 3)
        throw std::invalid_argument("duality_slice_pairs: need 3 variables");
    return tangent_report(ideal).slice_pairs;
}

}  // namespace staircase
