// Command-line front end: tangent reports, census sweeps, theorem
// verification, counterexample comparisons, closed-form tables.
//
// Exit codes: 0 ok, 1 failed verification, 2 parse error, 3 not artinian,
// 4 oracle mismatch, 5 I/O error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "staircase/census.hpp"
#include "staircase/serialize.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitNotArtinian = 3;
constexpr int kExitOracleMismatch = 4;
constexpr int kExitIoError = 5;

struct TangentOptions {
    std::string ideal_text;
    long long ed = 0;
    int fat = 0;
    std::vector<int> cx;
    int n = 0;
    bool json = false;
    bool oracle = false;
    long long prime = 32003;
};

staircase::MonomialIdeal resolve_ideal(const TangentOptions& opt) {
    int named = (opt.ed > 0) + (opt.fat > 0) + (!opt.cx.empty());
    if (named + !opt.ideal_text.empty() != 1)
        throw staircase::ParseError("pass exactly one of IDEAL, --ed, --fat, --cx");
    if (opt.ed > 0) return staircase::lex_truncation_ideal(opt.ed);
    if (opt.fat > 0) return staircase::power_ideal(3, opt.fat);
    if (!opt.cx.empty()) {
        const int r = opt.cx[0];
        const int i = opt.cx.size() > 1 ? opt.cx[1] : 2;
        return staircase::counterexample_ideal(r, i);
    }
    return staircase::parse_ideal(opt.ideal_text, opt.n);
}

void print_record_table(std::ostream& os, const staircase::CensusRecord& rec) {
    os << staircase::kCensusCsvHeader << "\n";
    std::ostringstream row;
    staircase::write_census_csv_row(row, rec);
    os << row.str();
}

int cmd_tangent(const TangentOptions& opt) {
    const auto ideal = resolve_ideal(opt);
    const auto rep = staircase::tangent_report(ideal);

    long long oracle_dim = -1;
    if (opt.oracle) oracle_dim = staircase::hom_dim(ideal, ideal, opt.prime);

    if (opt.json) {
        auto j = staircase::report_to_json(rep);
        if (rep.n == 3) {
            j["smooth"] = rep.total == 3 * rep.d;
            j["min_x_power"] = *ideal.pure_power(0);
            j["flags"] = staircase::census_flags(ideal, rep.d);
        }
        if (opt.oracle) {
            j["oracle_dim"] = oracle_dim;
            j["oracle_ok"] = oracle_dim == rep.total;
        }
        std::cout << j.dump(2) << "\n";
    } else if (rep.n == 3) {
        const auto rec =
            staircase::record_from_report(rep, staircase::is_strongly_stable(ideal));
        print_record_table(std::cout, rec);
        std::cout << "smooth: " << (rep.total == 3 * rep.d ? "yes" : "no") << "\n";
        if (opt.oracle)
            std::cout << "oracle: " << oracle_dim
                      << (oracle_dim == rep.total ? " (ok)" : " (MISMATCH)") << "\n";
    } else {
        std::cout << "ideal: " << staircase::to_text(ideal) << "\n"
                  << "d: " << rep.d << "\ntotal: " << rep.total << "\n";
        for (const auto& [sig, dim] : rep.signature_totals)
            std::cout << sig << ": " << dim << "\n";
        std::cout << "socle: " << rep.socle_dim << "\n";
        if (opt.oracle)
            std::cout << "oracle: " << oracle_dim
                      << (oracle_dim == rep.total ? " (ok)" : " (MISMATCH)") << "\n";
    }
    if (opt.oracle && oracle_dim != rep.total) return kExitOracleMismatch;
    return 0;
}

struct CensusOptions {
    long long d = 0;
    int filter_xpow = 0;
    std::string csv_path;
    std::string jsonl_path;
    bool budget_override = false;
    int workers = 0;
    bool json = false;
};

int cmd_census(const CensusOptions& opt) {
    staircase::CensusFilter filter;
    if (opt.filter_xpow > 0) filter.exclude_x_power = opt.filter_xpow;
    const int workers = opt.workers > 0 ? opt.workers : staircase::default_worker_count();

    if (!opt.jsonl_path.empty()) {
        // streamed in enumeration order, chunked so the 39k reports never
        // sit in memory at once
        std::ofstream out(opt.jsonl_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << opt.jsonl_path << "\n";
            return kExitIoError;
        }
        std::vector<staircase::MonomialIdeal> chunk;
        auto flush = [&] {
            auto jsons = staircase::ordered_parallel_map(
                chunk, workers, [](const staircase::MonomialIdeal& m) {
                    auto rep = staircase::tangent_report(m);
                    auto j = staircase::report_to_json(rep);
                    j["min_x_power"] = *m.pure_power(0);
                    j["strongly_stable"] = true;
                    j["flags"] = staircase::census_flags(m, rep.d);
                    return j.dump();
                });
            for (auto& line : jsons) out << line << "\n";
            chunk.clear();
        };
        staircase::enumerate_strongly_stable(opt.d, [&](const staircase::MonomialIdeal& m) {
            if (!filter.keep(m)) return;
            chunk.push_back(m);
            if (chunk.size() >= 1024) flush();
        }, opt.budget_override);
        flush();
        if (!out) {
            std::cerr << "write failed: " << opt.jsonl_path << "\n";
            return kExitIoError;
        }
    }

    const auto records =
        staircase::search_extremes(opt.d, filter, workers, opt.budget_override);

    if (!opt.csv_path.empty()) {
        std::ofstream out(opt.csv_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << opt.csv_path << "\n";
            return kExitIoError;
        }
        staircase::write_census_csv_header(out);
        for (const auto& rec : records) staircase::write_census_csv_row(out, rec);
        if (!out) {
            std::cerr << "write failed: " << opt.csv_path << "\n";
            return kExitIoError;
        }
    }

    long long max_total = records.empty() ? 0 : records.front().total;
    std::vector<std::string> argmax;
    for (const auto& rec : records) {
        if (rec.total != max_total) break;
        argmax.push_back(rec.ideal);
    }
    if (opt.json) {
        nlohmann::json j{{"d", opt.d},
                         {"count", static_cast<long long>(records.size())},
                         {"max_total", max_total},
                         {"argmax", argmax}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "count: " << records.size() << "\nmax_total: " << max_total << "\n";
        for (const auto& ideal : argmax) std::cout << "argmax: " << ideal << "\n";
    }
    return 0;
}

int cmd_verify(long long d_max, bool with_oracle, bool json, int workers) {
    const auto report = staircase::verify_theorem_suite(d_max, with_oracle, workers);
    if (json) {
        std::cout << staircase::verify_report_to_json(report).dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << std::left << std::setw(28) << c.name
                      << (c.pass ? "pass" : "FAIL") << "  cases=" << c.cases;
            if (!c.pass) std::cout << "  first: " << c.counterexample;
            std::cout << "\n";
        }
    }
    return report.all_pass ? 0 : kExitVerifyFailed;
}

int cmd_counterexample(int r, bool json) {
    const auto rep = staircase::counterexample_report(r);
    if (json) {
        std::cout << staircase::counterexample_report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "r: " << rep.r << "\nd: " << rep.d << "\n"
                  << "dim T(E(d)): " << rep.e_total << " (formula " << rep.e_formula
                  << "), socle " << rep.e_socle << " + " << (rep.e_total - rep.e_socle)
                  << " non-socle\n"
                  << "dim T(J):    " << rep.j_total << ", socle " << rep.j_socle << " + "
                  << (rep.j_total - rep.j_socle) << " non-socle\n"
                  << "strict: " << (rep.strict ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_formulas(int r, bool json) {
    const auto fat = staircase::fat_point_tangent_dims(r);
    nlohmann::json j{{"r", r},
                     {"fat_colength", staircase::binom(r + 2, 3)},
                     {"fat_total", fat.total},
                     {"fat_signatures", fat.by_signature}};
    if (r >= 3) {
        j["e_colength"] = staircase::binom(r + 2, 3) + r + 3;
        j["e_total"] = staircase::e_ideal_tangent_formula(r);
    }
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "r: " << r << "\nfat point colength: " << j["fat_colength"]
                  << "\nfat point tangent total: " << fat.total << "\n";
        for (const auto& [sig, dim] : fat.by_signature)
            std::cout << "  " << sig << ": " << dim << "\n";
        if (r >= 3)
            std::cout << "lexsegment colength: " << j["e_colength"]
                      << "\nlexsegment tangent total: " << j["e_total"] << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"staircase tangent-space calculator for monomial ideals"};
    app.require_subcommand(1);

    TangentOptions topt;
    auto* tangent = app.add_subcommand("tangent", "tangent report for one ideal");
    tangent->add_option("ideal", topt.ideal_text, "ideal text, e.g. \"x^2, x*y, y^3, z\"");
    tangent->add_option("--ed", topt.ed, "use the lexsegment ideal of this colength");
    tangent->add_option("--fat", topt.fat, "use the fat point of this order");
    tangent->add_option("--cx", topt.cx, "use the counterexample family: r [i]")
        ->expected(1, 2);
    tangent->add_option("--n", topt.n, "ambient variable count (default: inferred)");
    tangent->add_flag("--json", topt.json, "machine-readable output");
    tangent->add_flag("--oracle", topt.oracle, "cross-check with the finite-field kernel");
    tangent->add_option("--prime", topt.prime, "oracle prime (default 32003)");

    CensusOptions copt;
    auto* census = app.add_subcommand("census", "strongly stable census at one colength");
    census->add_option("--d", copt.d, "colength")->required();
    census->add_option("--filter-xpow", copt.filter_xpow,
                       "keep only ideals not containing this power of x");
    census->add_option("--csv", copt.csv_path, "write records (sorted by total) to CSV");
    census->add_option("--jsonl", copt.jsonl_path,
                       "stream full reports (enumeration order) to JSONL");
    census->add_flag("--budget-override", copt.budget_override, "lift the colength budget");
    census->add_option("--workers", copt.workers, "parallel workers (default: all cores)");
    census->add_flag("--json", copt.json, "machine-readable summary");

    long long d_max = 8;
    bool verify_oracle = false, verify_json = false;
    int verify_workers = 0;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--d-max", d_max, "largest strongly stable colength (default 8)");
    verify->add_flag("--oracle", verify_oracle, "include the finite-field oracle rows");
    verify->add_flag("--json", verify_json, "machine-readable output");
    verify->add_option("--workers", verify_workers, "parallel workers");

    int cx_r = 3;
    bool cx_json = false;
    auto* cx = app.add_subcommand("counterexample",
                                  "compare the lexsegment ideal with the witness family");
    cx->add_option("--r", cx_r, "family parameter (default 3)");
    cx->add_flag("--json", cx_json, "machine-readable output");

    int f_r = 3;
    bool f_json = false;
    auto* formulas = app.add_subcommand("formulas", "closed-form tangent dimensions");
    formulas->add_option("--r", f_r, "order (default 3)");
    formulas->add_flag("--json", f_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tangent->parsed()) return cmd_tangent(topt);
        if (census->parsed()) return cmd_census(copt);
        if (verify->parsed()) return cmd_verify(d_max, verify_oracle, verify_json, verify_workers);
        if (cx->parsed()) return cmd_counterexample(cx_r, cx_json);
        if (formulas->parsed()) return cmd_formulas(f_r, f_json);
    } catch (const staircase::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const staircase::NotArtinianError& e) {
        std::cerr << "not artinian: " << e.what() << "\n";
        return kExitNotArtinian;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return 0;
}
