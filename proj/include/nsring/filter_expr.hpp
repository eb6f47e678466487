#pragma once

/**
 * @file filter_expr.hpp
 * @brief Conjunction-only predicate language for search filters.
 *
 * Grammar (whitespace-insensitive):
 *   expr    := term ("&&" term)*
 *   term    := atom op atom | "lambda" "==" set | ident
 *   atom    := ident | int | ident ("+"|"-") int
 *   op      := "==" | "<=" | ">="
 *   set     := "{" [int ("," int)*] "}"
 * A bare ident means ident == 1. `s` is -1 when absent. Named invariants:
 *   e, frobenius, mu, v, e0, e1, r, n, s, tau, mu_I, depth_g, stretched,
 *   postulation.
 */

#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "nsring/analysis.hpp"

namespace nsring {

using filter_predicate = std::function<bool(const analysis&)>;

namespace detail {

inline Int filter_variable(const analysis& a, const std::string& name) {
    const auto& f = a.filt;
    if (name == "e") return a.ring->multiplicity();
    if (name == "frobenius") return a.ring->frobenius();
    if (name == "mu") return a.ring->embedding_dimension();
    if (name == "v" || name == "e0") return f.v;
    if (name == "e1") return a.hilb.e1;
    if (name == "r") return f.r;
    if (name == "n") return f.n;
    if (name == "s") return f.s_first ? *f.s_first : -1;
    if (name == "tau") return f.tau;
    if (name == "mu_I") return f.mu_ideal;
    if (name == "depth_g") return f.depth_g;
    if (name == "stretched") return f.stretched ? 1 : 0;
    if (name == "postulation") return a.hilb.postulation;
    throw error("unknown invariant in filter: " + name);
}

struct filter_parser {
    std::string src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (src.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool peek_ident() {
        skip_ws();
        return pos < src.size() &&
               (std::isalpha(static_cast<unsigned char>(src[pos])) || src[pos] == '_');
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (start == pos) throw error("filter: expected a name at position " + std::to_string(start));
        return src.substr(start, pos - start);
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) throw error("filter: expected an integer at position " + std::to_string(start));
        return std::stoll(src.substr(start, pos - start));
    }

    // an atom evaluates to an integer against a report
    std::function<Int(const analysis&)> atom() {
        skip_ws();
        if (peek_ident()) {
            std::string name = ident();
            filter_variable_check(name);
            Int delta = 0;
            skip_ws();
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
                char sign = src[pos];
                ++pos;
                Int k = integer();
                delta = sign == '+' ? k : -k;
            }
            return [name, delta](const analysis& a) { return filter_variable(a, name) + delta; };
        }
        Int k = integer();
        return [k](const analysis&) { return k; };
    }

    static void filter_variable_check(const std::string& name) {
        static const char* known[] = {"e",   "frobenius", "mu",      "v",       "e0",
                                      "e1",  "r",         "n",       "s",       "tau",
                                      "mu_I", "depth_g",  "stretched", "postulation"};
        for (const char* k : known)
            if (name == k) return;
        throw error("unknown invariant in filter: " + name);
    }

    filter_predicate term() {
        skip_ws();
        // lambda set-equality
        std::size_t save = pos;
        if (peek_ident()) {
            std::string name = ident();
            if (name == "lambda") {
                if (!eat("==")) throw error("filter: lambda supports only ==");
                if (!eat("{")) throw error("filter: expected '{' after lambda ==");
                std::vector<Int> want;
                skip_ws();
                if (!eat("}")) {
                    for (;;) {
                        want.push_back(integer());
                        if (eat("}")) break;
                        if (!eat(",")) throw error("filter: expected ',' or '}' in lambda set");
                    }
                }
                std::sort(want.begin(), want.end());
                return [want](const analysis& a) { return a.filt.lambda == want; };
            }
            pos = save;  // plain atom path
        }
        auto lhs = atom();
        skip_ws();
        if (eat("==")) {
            auto rhs = atom();
            return [lhs, rhs](const analysis& a) { return lhs(a) == rhs(a); };
        }
        if (eat("<=")) {
            auto rhs = atom();
            return [lhs, rhs](const analysis& a) { return lhs(a) <= rhs(a); };
        }
        if (eat(">=")) {
            auto rhs = atom();
            return [lhs, rhs](const analysis& a) { return lhs(a) >= rhs(a); };
        }
        // bare name: nonzero test (covers `stretched`)
        return [lhs](const analysis& a) { return lhs(a) == 1; };
    }

    filter_predicate parse() {
        std::vector<filter_predicate> terms;
        terms.push_back(term());
        while (eat("&&")) terms.push_back(term());
        skip_ws();
        if (pos != src.size())
            throw error("filter: trailing input at position " + std::to_string(pos));
        return [terms](const analysis& a) {
            for (const auto& t : terms)
                if (!t(a)) return false;
            return true;
        };
    }
};

}  // namespace detail

/// Compiles a filter expression; throws nsring::error on syntax problems.
inline filter_predicate parse_filter(const std::string& text) {
    detail::filter_parser p{text};
    return p.parse();
}

}  // namespace nsring
