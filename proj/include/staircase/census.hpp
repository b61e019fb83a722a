#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "staircase/families.hpp"
#include "staircase/format.hpp"
#include "staircase/hom_oracle.hpp"
#include "staircase/tangent.hpp"

namespace staircase {

// Enumeration refuses colengths above this without an explicit override.
inline constexpr long long kCensusBudget = 60;
inline constexpr long long kAllArtinianGuard = 10;

/// Strictly decreasing positive slice values b_0 > b_1 > ... > 0. These
/// encode exactly the strongly stable ideals in two variables: moving one
/// unit from the last variable onto the first shifts a slice column left,
/// which stays inside the staircase iff consecutive slices drop by at
/// least one.
struct StrictPartition {
    std::vector<int> parts;

    explicit StrictPartition(std::vector<int> p = {}) : parts(std::move(p)) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
            bool ok = parts[j] > 0 && (j == 0 || parts[j] < parts[j - 1]);
            if (!ok) throw std::invalid_argument("parts must strictly decrease to 0");
        }
    }

    long long weight() const {
        long long w = 0;
        for (int v : parts) w += v;
        return w;
    }

    MonomialIdeal to_two_var_ideal() const {
        std::vector<Exponent> gens;
        for (std::size_t j = 0; j < parts.size(); ++j)
            gens.push_back({static_cast<int>(j), parts[j]});
        gens.push_back({static_cast<int>(parts.size()), 0});
        return MonomialIdeal(2, std::move(gens));
    }
};

namespace detail {

/// Assembles a 3-variable ideal from its fiber slice rows: row i holds
/// the minimal third-exponents of fiber i, the fiber after the last row
/// is the full ring.
inline MonomialIdeal ideal_from_fiber_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            gens.push_back({static_cast<int>(i), static_cast<int>(j), rows[i][j]});
        gens.push_back({static_cast<int>(i), static_cast<int>(rows[i].size()), 0});
    }
    gens.push_back({static_cast<int>(rows.size()), 0, 0});
    return MonomialIdeal(3, std::move(gens));
}

inline MonomialIdeal ideal_from_slices_2d(const std::vector<int>& b) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < b.size(); ++i)
        gens.push_back({static_cast<int>(i), b[i]});
    gens.push_back({static_cast<int>(b.size()), 0});
    return MonomialIdeal(2, std::move(gens));
}

/// Largest weight a strict partition under the given slice caps can
/// carry, with every part below `bound`.
inline long long strict_capacity(const std::vector<int>& caps, std::size_t from, int bound) {
    long long total = 0;
    for (std::size_t j = from; j < caps.size(); ++j) {
        const int limit = std::min(caps[j], bound - static_cast<int>(j - from));
        if (limit <= 0) break;
        total += limit;
    }
    return total;
}

/// All strict partitions of `weight` with parts[j] <= caps[j], parts
/// strictly decreasing; first part descending, then recursively the same,
/// which yields descending lex order.
inline void strict_partitions_capped(long long weight, const std::vector<int>& caps,
                                     std::size_t depth, int prev_part,
                                     std::vector<int>& acc,
                                     const std::function<void(const std::vector<int>&)>& emit) {
    if (weight == 0) {
        emit(acc);
        return;
    }
    if (depth >= caps.size()) return;
    int hi = std::min<long long>({static_cast<long long>(caps[depth]), prev_part - 1, weight});
    for (int c = hi; c >= 1; --c) {
        if (weight - c > strict_capacity(caps, depth + 1, c)) break;
        acc.push_back(c);
        strict_partitions_capped(weight - c, caps, depth + 1, c, acc, emit);
        acc.pop_back();
    }
}

inline void enumerate_fibers(long long remaining, const std::vector<int>& caps,
                             std::vector<std::vector<int>>& rows,
                             const std::function<void(const MonomialIdeal&)>& emit) {
    if (remaining == 0) {
        emit(ideal_from_fiber_rows(rows));
        return;
    }
    const long long max_w = std::min(remaining, strict_capacity(caps, 0, 1 << 30));
    std::vector<int> acc;
    for (long long w = max_w; w >= 1; --w) {
        // later fibers shrink strictly, so at most w(w-1)/2 weight remains
        if (remaining - w > w * (w - 1) / 2) break;
        strict_partitions_capped(w, caps, 0, 1 << 30, acc,
            [&](const std::vector<int>& parts) {
                rows.push_back(parts);
                std::vector<int> next_caps(parts.begin() + std::min<std::size_t>(1, parts.size()),
                                           parts.end());
                enumerate_fibers(remaining - w, next_caps, rows, emit);
                rows.pop_back();
            });
    }
}

}  // namespace detail

/// Exactly the strongly stable artinian ideals of colength d in three
/// variables, each once, in a fixed deterministic order (fiber weights
/// descending, slice values lexicographically descending within).
///
/// The enumeration walks fiber sequences I_0, I_1, ... where every fiber
/// is a strict partition and each successive fiber contains the previous
/// one shifted by the middle variable (slicewise: the new fiber's column
/// j is capped by the previous fiber's column j+1). Those two conditions
/// reproduce strong stability in three variables: exchanges inside a
/// fiber are two-variable strong stability, an exchange from the middle
/// variable onto the first is exactly the shift containment, and an
/// exchange from the last variable onto the first factors through the
/// two-variable exchange followed by the shift.
inline void enumerate_strongly_stable(long long d,
                                      const std::function<void(const MonomialIdeal&)>& emit,
                                      bool budget_override = false) {
    if (d < 1) throw std::invalid_argument("enumerate_strongly_stable: need d >= 1");
    if (d > kCensusBudget && !budget_override)
        throw BudgetError("colength " + std::to_string(d) + " exceeds the census budget; pass the override");
    std::vector<std::vector<int>> rows;
    std::vector<int> caps(static_cast<std::size_t>(d), static_cast<int>(d));
    detail::enumerate_fibers(d, caps, rows, emit);
}

inline std::vector<MonomialIdeal> enumerate_strongly_stable(long long d,
                                                            bool budget_override = false) {
    std::vector<MonomialIdeal> out;
    enumerate_strongly_stable(d, [&](const MonomialIdeal& m) { out.push_back(m); },
                              budget_override);
    return out;
}

namespace detail {

inline void partitions_capped(long long weight, const std::vector<int>& caps, std::size_t depth,
                              int prev_part, std::vector<int>& acc,
                              const std::function<void(const std::vector<int>&)>& emit) {
    if (weight == 0) {
        emit(acc);
        return;
    }
    if (depth >= caps.size()) return;
    const int hi = std::min<long long>({static_cast<long long>(caps[depth]), prev_part, weight});
    for (int c = hi; c >= 1; --c) {
        acc.push_back(c);
        partitions_capped(weight - c, caps, depth + 1, c, acc, emit);
        acc.pop_back();
    }
}

inline void enumerate_plane_partition_rows(long long remaining, const std::vector<int>& caps,
                                           std::vector<std::vector<int>>& rows,
                                           const std::function<void(const MonomialIdeal&)>& emit) {
    if (remaining == 0) {
        emit(ideal_from_fiber_rows(rows));
        return;
    }
    std::vector<int> acc;
    for (long long w = remaining; w >= 1; --w) {
        partitions_capped(w, caps, 0, 1 << 30, acc, [&](const std::vector<int>& parts) {
            rows.push_back(parts);
            enumerate_plane_partition_rows(remaining - w, parts, rows, emit);
            rows.pop_back();
        });
    }
}

}  // namespace detail

/// All artinian monomial ideals of colength d: partitions for two
/// variables, plane partitions for three. Deterministic order, guarded to
/// small d (the counts grow quickly and exhaustive callers only need desk
/// sizes).
inline void enumerate_all_artinian(int n, long long d,
                                   const std::function<void(const MonomialIdeal&)>& emit) {
    if (n != 2 && n != 3) throw std::invalid_argument("enumerate_all_artinian: n must be 2 or 3");
    if (d < 1) throw std::invalid_argument("enumerate_all_artinian: need d >= 1");
    if (d > kAllArtinianGuard)
        throw BudgetError("enumerate_all_artinian is guarded to colength " +
                          std::to_string(kAllArtinianGuard));
    if (n == 2) {
        std::vector<int> acc;
        std::vector<int> caps(static_cast<std::size_t>(d), static_cast<int>(d));
        detail::partitions_capped(d, caps, 0, 1 << 30, acc, [&](const std::vector<int>& parts) {
            emit(detail::ideal_from_slices_2d(parts));
        });
    } else {
        std::vector<std::vector<int>> rows;
        std::vector<int> caps(static_cast<std::size_t>(d), static_cast<int>(d));
        detail::enumerate_plane_partition_rows(d, caps, rows, emit);
    }
}

inline std::vector<MonomialIdeal> enumerate_all_artinian(int n, long long d) {
    std::vector<MonomialIdeal> out;
    enumerate_all_artinian(n, d, [&](const MonomialIdeal& m) { out.push_back(m); });
    return out;
}

inline int default_worker_count() {
    if (const char* env = std::getenv("STAIRCASE_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Order-preserving parallel map: out[i] = fn(in[i]), workers pull
/// indices from a shared counter. Results are identical to the serial
/// run.
template <typename In, typename Fn>
auto ordered_parallel_map(const std::vector<In>& in, int workers, Fn fn)
    -> std::vector<decltype(fn(in.front()))> {
    using Out = decltype(fn(in.front()));
    std::vector<Out> out(in.size());
    if (in.empty()) return out;
    workers = std::max(1, std::min<int>(workers, static_cast<int>(in.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= in.size()) return;
            try {
                out[i] = fn(in[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

/// One census row: the canonical ideal plus the invariants that the CSV
/// persists. Pairing and parity are rechecked at construction.
struct CensusRecord {
    std::string ideal;
    long long d = 0;
    long long total = 0;
    long long ppn = 0, pnp = 0, npp = 0, pnn = 0, npn = 0, nnp = 0;
    long long socle = 0;
    int min_x_power = 0;
    bool strongly_stable = false;
    std::string flags;
};

/// Named-family flags for a 3-variable ideal of colength d.
inline std::string census_flags(const MonomialIdeal& ideal, long long d) {
    std::string flags;
    auto append = [&](const std::string& f) {
        if (!flags.empty()) flags += ";";
        flags += f;
    };
    for (int r = 1; binom(r + 2, 3) <= d; ++r)
        if (binom(r + 2, 3) == d && ideal == power_ideal(3, r)) append("fat(" + std::to_string(r) + ")");
    if (ideal == lex_truncation_ideal(d)) append("lex");
    for (int r = 3; binom(r + 2, 3) + r + 3 <= d; ++r) {
        const long long i = d - binom(r + 2, 3) - r - 1;
        if (i >= 2 && i <= r - 1 && ideal == counterexample_ideal(r, static_cast<int>(i)))
            append("cx(" + std::to_string(r) + "," + std::to_string(i) + ")");
    }
    return flags;
}

inline CensusRecord record_from_report(const TangentReport& rep, bool strongly_stable_flag) {
    CensusRecord rec;
    rec.ideal = to_text(rep.ideal);
    rec.d = rep.d;
    rec.total = rep.total;
    rec.ppn = rep.signature_totals.at("ppn");
    rec.pnp = rep.signature_totals.at("pnp");
    rec.npp = rep.signature_totals.at("npp");
    rec.pnn = rep.signature_totals.at("pnn");
    rec.npn = rep.signature_totals.at("npn");
    rec.nnp = rep.signature_totals.at("nnp");
    rec.socle = rep.socle_dim;
    rec.min_x_power = *rep.ideal.pure_power(0);
    rec.strongly_stable = strongly_stable_flag;
    rec.flags = census_flags(rep.ideal, rep.d);
    ensure(rec.ppn == rec.nnp + rec.d && rec.pnp == rec.npn + rec.d && rec.npp == rec.pnn + rec.d,
           "census record violates the signature pairing");
    ensure((rec.total - rec.d) % 2 == 0, "census record violates the parity identity");
    return rec;
}

struct CensusFilter {
    // keep only ideals that do not contain this power of the first
    // variable
    std::optional<int> exclude_x_power;

    bool keep(const MonomialIdeal& ideal) const {
        if (!exclude_x_power) return true;
        Exponent xp(ideal.var_count(), 0);
        xp[0] = *exclude_x_power;
        return !ideal.contains(xp);
    }
};

/// Tangent statistics over the strongly stable census at colength d,
/// sorted by tangent total descending (ties by canonical text). The
/// filter is applied before any tangent computation.
inline std::vector<CensusRecord> search_extremes(long long d, const CensusFilter& filter = {},
                                                 int workers = 0, bool budget_override = false) {
    if (workers <= 0) workers = default_worker_count();
    std::vector<MonomialIdeal> ideals;
    enumerate_strongly_stable(d, [&](const MonomialIdeal& m) {
        if (filter.keep(m)) ideals.push_back(m);
    }, budget_override);
    auto records = ordered_parallel_map(ideals, workers, [](const MonomialIdeal& m) {
        return record_from_report(tangent_report(m), true);
    });
    std::stable_sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) {
        if (a.total != b.total) return a.total > b.total;
        return a.ideal < b.ideal;
    });
    return records;
}

/// Side-by-side comparison of the lexsegment ideal and the witness ideal
/// at colength C(r+2,3) + r + 3. Construction fails loudly if any of the
/// established facts (closed form, socle splits, strict inequality) do
/// not hold.
struct CounterexampleReport {
    int r = 0;
    long long d = 0;
    long long e_total = 0, e_socle = 0, e_formula = 0;
    long long j_total = 0, j_socle = 0;
    bool strict = false;
};

inline CounterexampleReport counterexample_report(int r) {
    if (r < 3) throw std::invalid_argument("counterexample_report: need r >= 3");
    CounterexampleReport out;
    out.r = r;
    out.d = binom(r + 2, 3) + r + 3;
    const auto e_rep = tangent_report(lex_truncation_ideal(out.d));
    const auto j_rep = tangent_report(counterexample_ideal(r, 2));
    out.e_total = e_rep.total;
    out.e_socle = e_rep.socle_dim;
    out.e_formula = e_ideal_tangent_formula(r);
    out.j_total = j_rep.total;
    out.j_socle = j_rep.socle_dim;
    out.strict = out.j_total > out.e_total;
    ensure(j_rep.d == out.d, "witness ideal has the wrong colength");
    ensure(out.e_total == out.e_formula, "lexsegment tangent total disagrees with the closed form");
    const long long socle_block = checked_mul(binom(r + 2, 2) + 1, binom(r + 1, 2) + 1);
    ensure(out.e_socle == socle_block && out.j_socle == socle_block,
           "socle blocks disagree with the closed form");
    ensure(out.e_total - out.e_socle == 7, "lexsegment ideal must have exactly 7 non-socle maps");
    ensure(out.j_total - out.j_socle >= 10, "witness ideal must have at least 10 non-socle maps");
    ensure(out.strict, "witness tangent dimension must exceed the lexsegment one");
    return out;
}

struct TheoremCheck {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string counterexample;  // first failure, empty when pass
};

struct VerifyReport {
    std::vector<TheoremCheck> checks;
    bool all_pass = true;
};

namespace detail {

struct VerifyEntry {
    MonomialIdeal ideal;
    TangentReport rep;
    bool strongly_stable = false;
};

inline long long minimal_r_for(long long d) {
    int r = 0;
    while (binom(r + 2, 3) < d) ++r;
    return r;
}

template <typename Fn>
void run_check(VerifyReport& report, const std::string& name, Fn&& fn) {
    TheoremCheck check;
    check.name = name;
    try {
        fn(check);
    } catch (const std::exception& e) {
        check.pass = false;
        if (check.counterexample.empty()) check.counterexample = std::string("exception: ") + e.what();
    }
    report.checks.push_back(check);
    report.all_pass = report.all_pass && check.pass;
}

inline void fail(TheoremCheck& check, const std::string& witness) {
    if (check.pass) {
        check.pass = false;
        check.counterexample = witness;
    }
}

}  // namespace detail

/// Runs every verifiable statement over the exhaustive enumerations up to
/// d_max (the all-ideal sets stay capped at their guards) and reports
/// pass/fail per statement with the first counterexample. Statement
/// failures are reported, never thrown.
inline VerifyReport verify_theorem_suite(long long d_max, bool with_oracle = false,
                                         int workers = 0) {
    if (d_max < 1) throw std::invalid_argument("verify_theorem_suite: need d_max >= 1");
    if (d_max > 24) throw BudgetError("verify_theorem_suite is guarded to d_max <= 24");
    if (workers <= 0) workers = default_worker_count();

    using detail::VerifyEntry;
    std::vector<VerifyEntry> all3;   // exhaustive 3-variable ideals
    std::vector<VerifyEntry> ss;     // strongly stable ideals
    std::vector<VerifyEntry> all2;   // exhaustive 2-variable ideals

    {
        std::vector<MonomialIdeal> raw;
        for (long long d = 1; d <= std::min<long long>(d_max, 8); ++d)
            enumerate_all_artinian(3, d, [&](const MonomialIdeal& m) { raw.push_back(m); });
        all3 = ordered_parallel_map(raw, workers, [](const MonomialIdeal& m) {
            return VerifyEntry{m, tangent_report(m), is_strongly_stable(m)};
        });
    }
    {
        std::vector<MonomialIdeal> raw;
        for (long long d = 1; d <= d_max; ++d)
            enumerate_strongly_stable(d, [&](const MonomialIdeal& m) { raw.push_back(m); });
        ss = ordered_parallel_map(raw, workers, [](const MonomialIdeal& m) {
            return VerifyEntry{m, tangent_report(m), true};
        });
    }
    {
        std::vector<MonomialIdeal> raw;
        for (long long d = 1; d <= std::min<long long>(d_max, kAllArtinianGuard); ++d)
            enumerate_all_artinian(2, d, [&](const MonomialIdeal& m) { raw.push_back(m); });
        all2 = ordered_parallel_map(raw, workers, [](const MonomialIdeal& m) {
            return VerifyEntry{m, tangent_report(m), is_strongly_stable(m)};
        });
    }

    auto for_both = [&](const std::function<void(const VerifyEntry&)>& fn) {
        for (const auto& e : all3) fn(e);
        for (const auto& e : ss) fn(e);
    };

    VerifyReport report;

    detail::run_check(report, "pairing-signatures", [&](TheoremCheck& c) {
        for_both([&](const VerifyEntry& e) {
            ++c.cases;
            const auto& s = e.rep.signature_totals;
            if (!(s.at("ppn") == s.at("nnp") + e.rep.d && s.at("pnp") == s.at("npn") + e.rep.d &&
                  s.at("npp") == s.at("pnn") + e.rep.d))
                detail::fail(c, to_text(e.ideal));
        });
    });

    detail::run_check(report, "parity", [&](TheoremCheck& c) {
        for_both([&](const VerifyEntry& e) {
            ++c.cases;
            if ((e.rep.total - e.rep.d) % 2 != 0) detail::fail(c, to_text(e.ideal));
        });
    });

    detail::run_check(report, "smoothness-criterion", [&](TheoremCheck& c) {
        for_both([&](const VerifyEntry& e) {
            ++c.cases;
            const auto& s = e.rep.signature_totals;
            const bool no_forbidden = s.at("pnn") == 0 && s.at("npn") == 0 && s.at("nnp") == 0;
            if (no_forbidden != (e.rep.total == 3 * e.rep.d)) detail::fail(c, to_text(e.ideal));
        });
    });

    detail::run_check(report, "duality-slices", [&](TheoremCheck& c) {
        for_both([&](const VerifyEntry& e) {
            ++c.cases;
            for (const auto& [key, pair] : e.rep.slice_pairs)
                if (pair.first != pair.second) detail::fail(c, to_text(e.ideal));
        });
    });

    detail::run_check(report, "two-variable-slices", [&](TheoremCheck& c) {
        for (const auto& e : all2) {
            ++c.cases;
            const auto& s = e.rep.signature_totals;
            if (!(s.at("pn") == e.rep.d && s.at("np") == e.rep.d && e.rep.total == 2 * e.rep.d)) {
                detail::fail(c, to_text(e.ideal));
                continue;
            }
            const auto b = two_var_slices(e.ideal);
            for (std::size_t i = 0; i < b.size(); ++i) {
                long long pos = 0, neg = 0;
                for (const auto& [alpha, dim] : e.rep.per_degree) {
                    if (alpha[0] == static_cast<int>(i)) pos += dim;
                    if (alpha[0] == -static_cast<int>(i) - 1) neg += dim;
                }
                if (pos != b[i] || neg != b[i]) detail::fail(c, to_text(e.ideal));
            }
        }
    });

    detail::run_check(report, "corner-bound", [&](TheoremCheck& c) {
        for_both([&](const VerifyEntry& e) {
            if (e.rep.d > 12) return;
            ++c.cases;
            Staircase st(e.ideal);
            const auto& s = st.pure_powers();
            for (int a1 = 0; a1 <= s[0] && c.pass; ++a1) {
                for (int a2 = 0; a2 <= s[1] && c.pass; ++a2) {
                    long long observed = 0;
                    for (const auto& [alpha, dim] : e.rep.per_degree)
                        if (alpha[0] == a1 && alpha[1] == a2 && alpha[2] < 0) observed += dim;
                    if (observed > ppn_upper_bound(e.ideal, a1, a2)) detail::fail(c, to_text(e.ideal));
                }
            }
        });
    });

    detail::run_check(report, "slice-shift-inequality", [&](TheoremCheck& c) {
        for (const auto& e : ss) {
            ++c.cases;
            const auto tz = z_slice_table(e.ideal, {0, 1, 2});
            const auto ty = z_slice_table(e.ideal, {0, 2, 1});
            for (int i = 0; i <= tz.rows; ++i)
                for (int j = 0; j <= tz.cols; ++j)
                    if (tz.at(i + 1, j) > tz.at(i, j + 1)) detail::fail(c, to_text(e.ideal));
            for (int i = 0; i <= ty.rows; ++i)
                for (int j = 0; j <= ty.cols; ++j)
                    if (ty.at(i + 1, j) > ty.at(i, j + 1)) detail::fail(c, to_text(e.ideal));
        }
    });

    detail::run_check(report, "fiber-shift-containment", [&](TheoremCheck& c) {
        MonomialIdeal y_ideal(2, {{1, 0}});
        for (const auto& e : ss) {
            ++c.cases;
            const auto fibers = fiber_decomposition(e.ideal);
            for (std::size_t i = 0; i + 1 < fibers.fibers.size(); ++i) {
                if (!is_strongly_stable(fibers.fibers[i])) detail::fail(c, to_text(e.ideal));
                const auto shifted = colon(fibers.fibers[i], y_ideal);
                if (!fibers.fibers[i + 1].contains_ideal(shifted)) detail::fail(c, to_text(e.ideal));
            }
        }
    });

    detail::run_check(report, "fiber-partial-sums", [&](TheoremCheck& c) {
        for (const auto& e : ss) {
            ++c.cases;
            const long long r = detail::minimal_r_for(e.rep.d);
            const auto fibers = fiber_decomposition(e.ideal);
            auto fiber_len = [&](long long i) -> long long {
                if (i >= static_cast<long long>(fibers.fibers.size())) return 0;
                return fibers.fibers[static_cast<std::size_t>(i)].is_unit()
                           ? 0
                           : colength(fibers.fibers[static_cast<std::size_t>(i)]);
            };
            bool equal_all = true;
            for (long long j = 0; j <= r; ++j) {
                long long lhs = 0, rhs = 0;
                for (long long i = j; i <= r - 1; ++i) {
                    lhs += fiber_len(i);
                    rhs += binom(r - i + 1, 2);
                }
                if (lhs > rhs) detail::fail(c, to_text(e.ideal));
                if (j <= r - 1 && lhs != rhs) equal_all = false;
            }
            if (equal_all && !(e.ideal == power_ideal(3, static_cast<int>(r))))
                detail::fail(c, to_text(e.ideal));
        }
    });

    detail::run_check(report, "signature-extremality", [&](TheoremCheck& c) {
        for (int r = 2; binom(r + 2, 3) <= d_max; ++r) {
            const long long d = binom(r + 2, 3);
            const auto fat = fat_point_tangent_dims(r);
            const auto fat_ideal = power_ideal(3, r);
            for (const auto& e : ss) {
                if (e.rep.d != d) continue;
                ++c.cases;
                const auto& s = e.rep.signature_totals;
                const bool is_fat = e.ideal == fat_ideal;
                for (const char* sig : {"ppn", "pnp", "nnp", "npn"}) {
                    if (s.at(sig) > fat.by_signature.at(sig)) detail::fail(c, to_text(e.ideal));
                    if (s.at(sig) == fat.by_signature.at(sig) && !is_fat)
                        detail::fail(c, to_text(e.ideal));
                }
            }
        }
    });

    detail::run_check(report, "global-bound", [&](TheoremCheck& c) {
        for (const auto& e : ss) {
            ++c.cases;
            const long long r = detail::minimal_r_for(e.rep.d);
            const long long fat_total = checked_mul(binom(r + 2, 2), binom(r + 1, 2));
            const long long p = *e.ideal.pure_power(0);
            if (3 * e.rep.total > 4 * fat_total) detail::fail(c, to_text(e.ideal));
            if (e.rep.total > (2 * p + 1) * e.rep.d) detail::fail(c, to_text(e.ideal));
        }
    });

    detail::run_check(report, "three-quarters", [&](TheoremCheck& c) {
        for (const auto& e : ss) {
            const long long r = detail::minimal_r_for(e.rep.d);
            const long long p = *e.ideal.pure_power(0);
            if (4 * p > 3 * r + 1) continue;
            ++c.cases;
            const long long fat_total = checked_mul(binom(r + 2, 2), binom(r + 1, 2));
            if (e.rep.total > fat_total) detail::fail(c, to_text(e.ideal));
        }
    });

    detail::run_check(report, "singular-by-generators", [&](TheoremCheck& c) {
        for_both([&](const VerifyEntry& e) {
            ++c.cases;
            if (singular_by_generators(e.ideal) && e.rep.total == 3 * e.rep.d)
                detail::fail(c, to_text(e.ideal));
        });
    });

    detail::run_check(report, "strongly-stable-smoothness", [&](TheoremCheck& c) {
        const Exponent x1{1, 0, 0};
        for (const auto& e : ss) {
            ++c.cases;
            const bool smooth = e.rep.total == 3 * e.rep.d;
            if (smooth != e.ideal.contains(x1)) detail::fail(c, to_text(e.ideal));
        }
    });

    detail::run_check(report, "enumeration-completeness", [&](TheoremCheck& c) {
        for (long long d = 1; d <= std::min<long long>(d_max, 8); ++d) {
            ++c.cases;
            std::set<std::string> from_stream;
            enumerate_strongly_stable(d, [&](const MonomialIdeal& m) {
                if (!from_stream.insert(to_text(m)).second) detail::fail(c, to_text(m));
            });
            std::set<std::string> from_filter;
            enumerate_all_artinian(3, d, [&](const MonomialIdeal& m) {
                if (is_strongly_stable(m)) from_filter.insert(to_text(m));
            });
            if (from_stream != from_filter) detail::fail(c, "colength " + std::to_string(d));
        }
    });

    if (with_oracle) {
        detail::run_check(report, "oracle-equivalence", [&](TheoremCheck& c) {
            for (const auto& e : all3) {
                if (e.rep.d > 6) continue;
                ++c.cases;
                if (hom_dim(e.ideal, e.ideal) != e.rep.total) {
                    detail::fail(c, to_text(e.ideal));
                    continue;
                }
                if (e.rep.d <= 4) {
                    const auto box = degree_box(e.ideal);
                    MultiDegree alpha = box.lo;
                    bool done = box.volume() == 0;
                    while (!done) {
                        long long expected = 0;
                        if (auto it = e.rep.per_degree.find(alpha); it != e.rep.per_degree.end())
                            expected = it->second;
                        if (hom_dim_graded(e.ideal, e.ideal, alpha) != expected)
                            detail::fail(c, to_text(e.ideal));
                        for (int i = 2; ; --i) {
                            if (i < 0) { done = true; break; }
                            if (++alpha[i] <= box.hi[i]) break;
                            alpha[i] = box.lo[i];
                        }
                    }
                }
            }
        });
    }

    return report;
}

}  // namespace staircase
