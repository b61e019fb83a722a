#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "staircase/census.hpp"
#include "staircase/format.hpp"
#include "staircase/tangent.hpp"

namespace staircase {

/// Stable JSON document for a tangent report. Map iteration order makes
/// per_degree lexicographically sorted; all keys are fixed.
inline nlohmann::json report_to_json(const TangentReport& rep) {
    nlohmann::json j;
    j["ideal"] = to_text(rep.ideal);
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["total"] = rep.total;
    j["socle_dim"] = rep.socle_dim;
    nlohmann::json sigs = nlohmann::json::object();
    for (const auto& [sig, dim] : rep.signature_totals) sigs[sig] = dim;
    j["signatures"] = sigs;
    nlohmann::json per_degree = nlohmann::json::array();
    for (const auto& [alpha, dim] : rep.per_degree)
        per_degree.push_back(nlohmann::json::array({alpha, dim}));
    j["per_degree"] = per_degree;
    nlohmann::json x_slices = nlohmann::json::array();
    for (const auto& [slice, dim] : rep.x_degree_slices)
        x_slices.push_back(nlohmann::json::array({slice, dim}));
    j["x_slices"] = x_slices;
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [key, value] : rep.slice_pairs)
        pairs.push_back(nlohmann::json::array({key.first, key.second, value.first, value.second}));
    j["duality_pairs"] = pairs;
    return j;
}

inline nlohmann::json record_to_json(const CensusRecord& rec) {
    return nlohmann::json{
        {"ideal", rec.ideal},       {"d", rec.d},
        {"total", rec.total},       {"ppn", rec.ppn},
        {"pnp", rec.pnp},           {"npp", rec.npp},
        {"pnn", rec.pnn},           {"npn", rec.npn},
        {"nnp", rec.nnp},           {"socle", rec.socle},
        {"min_x_power", rec.min_x_power},
        {"strongly_stable", rec.strongly_stable},
        {"flags", rec.flags}};
}

inline nlohmann::json verify_report_to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back(nlohmann::json{{"name", c.name},
                                        {"pass", c.pass},
                                        {"cases", c.cases},
                                        {"counterexample", c.counterexample}});
    return nlohmann::json{{"all_pass", report.all_pass}, {"checks", checks}};
}

inline nlohmann::json counterexample_report_to_json(const CounterexampleReport& rep) {
    return nlohmann::json{{"r", rep.r},
                          {"d", rep.d},
                          {"e_total", rep.e_total},
                          {"e_socle", rep.e_socle},
                          {"e_formula", rep.e_formula},
                          {"j_total", rep.j_total},
                          {"j_socle", rep.j_socle},
                          {"strict", rep.strict}};
}

inline std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

inline constexpr const char* kCensusCsvHeader =
    "ideal,d,total,ppn,pnp,npp,pnn,npn,nnp,socle,min_x_power,flags";

inline void write_census_csv_header(std::ostream& os) { os << kCensusCsvHeader << "\n"; }

inline void write_census_csv_row(std::ostream& os, const CensusRecord& rec) {
    os << csv_quote(rec.ideal) << ',' << rec.d << ',' << rec.total << ',' << rec.ppn << ','
       << rec.pnp << ',' << rec.npp << ',' << rec.pnn << ',' << rec.npn << ',' << rec.nnp << ','
       << rec.socle << ',' << rec.min_x_power << ',' << csv_quote(rec.flags) << "\n";
}

}  // namespace staircase
