#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "staircase/monomial_ideal.hpp"

namespace staircase {

/// Variable name for coordinate i: x,y,z up to three variables,
/// x1..xn beyond.
inline std::string variable_name(int i, int n) {
    if (n <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[i];
    }
    return "x" + std::to_string(i + 1);
}

inline std::string monomial_text(const Exponent& e, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += variable_name(i, n);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

/// Canonical text form: generators in descending lex order,
/// comma-separated, `*` between variable powers. Deterministic, and
/// reparsing yields an equal ideal.
inline std::string to_text(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (const auto& g : ideal.generators()) {
        if (!out.empty()) out += ", ";
        out += monomial_text(g, ideal.var_count());
    }
    return out;
}

namespace detail {

struct MonomialToken {
    // variable index -> exponent, sparse
    std::vector<std::pair<int, int>> powers;
    int max_var = 0;  // 1-based count implied by the variables seen
    bool is_one = false;
};

inline MonomialToken parse_monomial_token(const std::string& text) {
    MonomialToken tok;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size()) throw ParseError("empty monomial");
    if (text[i] == '1') {
        ++i;
        skip_ws();
        if (i != text.size()) throw ParseError("unexpected input after '1'");
        tok.is_one = true;
        return tok;
    }
    bool expect_factor = true;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (c == '*') {
            if (expect_factor) throw ParseError("misplaced '*'");
            expect_factor = true;
            ++i;
            continue;
        }
        int var = -1;
        if (c == 'x' || c == 'y' || c == 'z') {
            ++i;
            if (c == 'x' && i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                int idx = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    idx = idx * 10 + (text[i++] - '0');
                if (idx < 1) throw ParseError("variable index must be positive");
                var = idx - 1;
            } else {
                var = c - 'x';
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in monomial");
        }
        int exp = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected exponent after '^'");
            exp = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                exp = exp * 10 + (text[i++] - '0');
        }
        tok.powers.emplace_back(var, exp);
        tok.max_var = std::max(tok.max_var, var + 1);
        expect_factor = false;
    }
    if (expect_factor) throw ParseError("trailing '*' in monomial");
    if (tok.powers.empty()) throw ParseError("empty monomial");
    return tok;
}

}  // namespace detail

/// Parses the comma-separated ideal grammar. Variables are x,y,z or
/// x1..xn; `*` and `^1` are optional; whitespace is ignored. With n = 0
/// the variable count is inferred as the largest variable index used.
/// The text "0" denotes the zero ideal.
inline MonomialIdeal parse_ideal(const std::string& text, int n = 0) {
    std::vector<detail::MonomialToken> tokens;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0" || trimmed.empty()) {
        if (n <= 0) throw ParseError("zero ideal needs an explicit variable count");
        return MonomialIdeal(n);
    }
    std::stringstream ss(text);
    std::string piece;
    int max_var = 0;
    while (std::getline(ss, piece, ',')) {
        auto tok = detail::parse_monomial_token(piece);
        max_var = std::max(max_var, tok.max_var);
        tokens.push_back(std::move(tok));
    }
    if (n == 0) n = std::max(max_var, 1);
    if (max_var > n) throw ParseError("monomial uses a variable beyond the ambient count");
    std::vector<Exponent> gens;
    for (const auto& tok : tokens) {
        Exponent e(n, 0);
        if (!tok.is_one)
            for (auto [var, exp] : tok.powers) e[var] += exp;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

}  // namespace staircase
