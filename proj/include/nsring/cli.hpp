#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: analyze, family, search, verify-paper.
 *
 * Exit-status contract: 0 success, 1 input error, 2 verification mismatch
 * (a fixture or a family prediction failed against computation), 3 internal
 * inconsistency (two routes that must agree disagreed; an engine bug).
 */

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsring/analysis.hpp"
#include "nsring/family.hpp"
#include "nsring/filter_expr.hpp"
#include "nsring/fixtures.hpp"
#include "nsring/report_json.hpp"
#include "nsring/search.hpp"

namespace nsring::cli {

namespace detail {

inline std::string join(const std::vector<Int>& xs, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << sep;
        os << xs[i];
    }
    return os.str();
}

inline std::string set_str(const std::vector<Int>& xs) { return "{" + join(xs, ",") + "}"; }

inline void print_report(std::ostream& out, const analysis& a) {
    const auto& ring = *a.ring;
    const auto& f = a.filt;
    const auto& h = a.hilb;
    out << "semigroup H = <" << join(ring.minimal_generators(), ", ") << ">\n"
        << "  multiplicity e  " << ring.multiplicity() << "\n"
        << "  apery           " << join(ring.apery()) << "\n"
        << "  frobenius       " << ring.frobenius() << "\n"
        << "  mu              " << ring.embedding_dimension() << "\n"
        << "ideal thresholds  " << join(a.ideal.thresholds()) << "\n"
        << "filtration with Q = (u^" << f.v << ")\n"
        << "  r               " << f.r << "\n"
        << "  n               " << f.n << "\n"
        << "  alphas          " << (f.alphas.empty() ? "-" : join(f.alphas)) << "\n"
        << "  betas           " << (f.betas.empty() ? "-" : join(f.betas)) << "\n"
        << "  lambda          " << set_str(f.lambda) << "\n"
        << "  s               " << (f.s_first ? std::to_string(*f.s_first) : "-") << "\n"
        << "  stretched       " << (f.stretched ? "yes" : "no") << "\n"
        << "  tau             " << f.tau << "\n"
        << "  mu_I            " << f.mu_ideal << "\n"
        << "  depth G         " << f.depth_g << (f.depth_g == 1 ? "  (Cohen-Macaulay)" : "") << "\n"
        << "  sally           " << (f.sally.empty() ? "-" : join(f.sally)) << "\n"
        << "hilbert\n"
        << "  e0              " << h.e0 << "\n"
        << "  e1              " << h.e1 << "\n"
        << "  hpoly           " << join(h.hpoly) << "\n"
        << "  postulation     " << h.postulation << "\n"
        << "  hf              " << join(h.hf) << "\n";
    if (a.cls) {
        out << "classification\n";
        if (!a.cls->covered) {
            out << "  case            not covered (r = 5 needs the small-type hypothesis)\n";
        } else {
            const auto& c = a.cls->expected;
            out << "  case            " << c.label << "\n"
                << "  predicted       n=" << c.n_i << " alphas=[" << join(c.alphas, ",")
                << "] e1=" << (h.e0 - colength(a.ideal) + c.e1_offset)
                << (c.graded_cm ? " G Cohen-Macaulay" : " depth G = d-1") << "\n"
                << "  match           " << (a.cls->match ? "yes" : "NO") << "\n";
        }
    }
}

inline std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw error("cannot parse " + what + " entry '" + item + "'");
        }
    }
    if (out.empty()) throw error(what + " is empty");
    return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"exact invariants of monomial ideals in numerical-semigroup rings"};
    app.require_subcommand(1);

    // ---- analyze ----
    std::string an_gens, an_ideal;
    bool an_json = false;
    Int an_cap = 0;
    auto* an = app.add_subcommand("analyze", "full invariant report for one ideal");
    an->add_option("--gens", an_gens, "semigroup generators, comma separated")->required();
    an->add_option("--ideal", an_ideal, "ideal exponents (default: the maximal ideal)");
    an->add_flag("--json", an_json, "emit the report document");
    an->add_option("--cap", an_cap, "reduction iteration cap (default 4e)");

    // ---- family ----
    Int fa_b = 2, fa_e = 0, fa_ell = 0, fa_s = 0, fa_cap = 0;
    std::string fa_bn;
    bool fa_cor67 = false, fa_json = false;
    auto* fa = app.add_subcommand("family", "build and verify a family instance");
    fa->add_option("--b", fa_b, "parameter b >= 2")->required();
    fa->add_option("--e", fa_e, "multiplicity e")->required();
    fa->add_option("--ell", fa_ell, "parameter ell (the index of nilpotency)")->required();
    fa->add_option("--bn", fa_bn, "assignments n=b_n, comma separated");
    fa->add_flag("--cor67", fa_cor67, "derive b_n from (b, e, ell, s)");
    fa->add_option("--s", fa_s, "target Lambda = {s} (with --cor67)");
    fa->add_flag("--json", fa_json, "emit the report document");
    fa->add_option("--cap", fa_cap, "reduction iteration cap");

    // ---- search ----
    search_bounds bounds;
    std::string se_filter;
    Int se_limit = 0;
    bool se_json = false;
    auto* se = app.add_subcommand("search", "enumerate semigroups and filter by invariants");
    se->add_option("--max-e", bounds.max_e, "largest multiplicity (default 8)");
    se->add_option("--max-gen", bounds.max_gen, "largest generator (default 40)");
    se->add_option("--max-gens-count", bounds.max_gens_count, "largest generator count");
    se->add_option("--filter", se_filter, "conjunction of comparisons over named invariants");
    se->add_option("--limit", se_limit, "stop after this many matches");
    se->add_flag("--json", se_json, "emit an array of report documents");

    // ---- verify-paper ----
    std::string vp_fixture;
    bool vp_dump = false, vp_json = false;
    Int vp_cap = 0;
    auto* vp = app.add_subcommand("verify-paper",
                                  "recompute the registered literature examples and diff");
    vp->add_option("--fixture", vp_fixture, "run a single fixture by id");
    vp->add_flag("--dump-fixtures", vp_dump, "emit the fixture registry and exit");
    vp->add_flag("--json", vp_json, "emit outcomes as a document");
    vp->add_option("--cap", vp_cap, "reduction iteration cap");

    std::vector<const char*> argv;
    argv.push_back("nsring");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (an->parsed()) {
            auto ring = build_semigroup(detail::parse_int_list(an_gens, "--gens"));
            h_ideal ideal = an_ideal.empty()
                                ? h_ideal::maximal(ring)
                                : h_ideal::from_exponents(
                                      ring, detail::parse_int_list(an_ideal, "--ideal"));
            analysis a = analyze_full(ideal, an_cap);
            if (an_json)
                out << report_to_json(a).dump(2) << "\n";
            else
                detail::print_report(out, a);
            return 0;
        }

        if (fa->parsed()) {
            family_params params;
            if (fa_cor67) {
                if (fa_s < 2) throw error("--cor67 needs --s >= 2");
                params = corollary67_params(fa_b, fa_e, fa_ell, fa_s);
            } else {
                params = family_params{fa_b, fa_e, fa_ell, {}};
                if (!fa_bn.empty()) {
                    std::stringstream ss(fa_bn);
                    std::string item;
                    while (std::getline(ss, item, ',')) {
                        auto eq = item.find('=');
                        if (eq == std::string::npos)
                            throw error("cannot parse --bn entry '" + item + "' (want n=b_n)");
                        params.b_values[std::stoll(item.substr(0, eq))] =
                            std::stoll(item.substr(eq + 1));
                    }
                }
                auto violations = validate_family(params);
                if (!violations.empty()) {
                    for (const auto& v : violations) err << "constraint violated: " << v << "\n";
                    return 1;
                }
            }
            auto ring = build_family_semigroup(params);
            auto pred = predicted_report(params);
            analysis a = analyze_semigroup(ring, fa_cap);
            auto lemmas = check_construction_lemmas(params);

            bool match = pred.r == a.filt.r && pred.n_i == a.filt.n &&
                         pred.lambda == a.filt.lambda && pred.tau == a.filt.tau &&
                         pred.mu == ring->embedding_dimension() && pred.e1 == a.hilb.e1 &&
                         pred.depth_g == a.filt.depth_g && pred.stretched == a.filt.stretched &&
                         a.hilb.postulation <= pred.hf_valid_from;
            bool lemmas_ok = true;
            for (const auto& c : lemmas) lemmas_ok = lemmas_ok && c.pass;

            if (fa_json) {
                json doc;
                doc["params"] = {{"b", params.b}, {"e", params.e}, {"ell", params.ell}};
                json bn = json::object();
                for (auto [k, v] : params.b_values) bn[std::to_string(k)] = v;
                doc["params"]["bn"] = std::move(bn);
                doc["predicted"] = {{"n", pred.n_i},       {"r", pred.r},
                                    {"lambda", pred.lambda}, {"tau", pred.tau},
                                    {"mu", pred.mu},        {"e1", pred.e1},
                                    {"depth_g", pred.depth_g},
                                    {"hf_valid_from", pred.hf_valid_from}};
                doc["computed"] = report_to_json(a);
                doc["match"] = match;
                json checks = json::array();
                for (const auto& c : lemmas)
                    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                doc["construction_checks"] = std::move(checks);
                out << doc.dump(2) << "\n";
            } else {
                out << "family (b=" << params.b << ", e=" << params.e << ", ell=" << params.ell
                    << ")  H = <" << detail::join(ring->minimal_generators(), ", ") << ">\n";
                out << "  predicted: n=" << pred.n_i << " r=" << pred.r
                    << " lambda=" << detail::set_str(pred.lambda) << " tau=" << pred.tau
                    << " mu=" << pred.mu << " e1=" << pred.e1 << " depth=" << pred.depth_g << "\n";
                out << "  computed:  n=" << a.filt.n << " r=" << a.filt.r
                    << " lambda=" << detail::set_str(a.filt.lambda) << " tau=" << a.filt.tau
                    << " mu=" << ring->embedding_dimension() << " e1=" << a.hilb.e1
                    << " depth=" << a.filt.depth_g << "\n";
                for (const auto& c : lemmas)
                    out << "  check " << (c.pass ? "[pass] " : "[FAIL] ") << c.name
                        << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
                out << (match && lemmas_ok ? "prediction matches computation\n"
                                           : "PREDICTION MISMATCH\n");
            }
            return match && lemmas_ok ? 0 : 2;
        }

        if (se->parsed()) {
            search_spec spec;
            spec.bounds = bounds;
            spec.limit = se_limit;
            if (!se_filter.empty()) spec.predicate = parse_filter(se_filter);
            auto hits = run_search(spec);
            if (se_json) {
                json arr = json::array();
                for (const auto& h : hits) arr.push_back(report_to_json(h.result));
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& h : hits) {
                    const auto& f = h.result.filt;
                    out << "<" << detail::join(h.gens, ",") << ">  e=" << h.result.ring->multiplicity()
                        << " r=" << f.r << " n=" << f.n << " lambda=" << detail::set_str(f.lambda)
                        << " stretched=" << (f.stretched ? 1 : 0) << " tau=" << f.tau
                        << " e1=" << h.result.hilb.e1 << " depth_g=" << f.depth_g << "\n";
                }
                out << hits.size() << " matches\n";
            }
            return 0;
        }

        if (vp->parsed()) {
            const auto& all = paper_fixtures();
            if (vp_dump) {
                json arr = json::array();
                for (const auto& fx : all) {
                    json j = {{"id", fx.id},           {"source", fx.source},
                              {"gens", fx.gens},       {"r", fx.r},
                              {"n", fx.n},             {"tau", fx.tau},
                              {"mu", fx.mu},           {"e0", fx.e0},
                              {"e1", fx.e1},           {"depth_g", fx.depth_g},
                              {"stretched", fx.stretched}, {"lambda", fx.lambda},
                              {"hf_valid_from", fx.hf_valid_from}, {"erratum", fx.erratum}};
                    j["s"] = fx.s ? json(*fx.s) : json(nullptr);
                    if (fx.printed_e0) j["printed_e0"] = *fx.printed_e0;
                    if (fx.printed_e1) j["printed_e1"] = *fx.printed_e1;
                    if (fx.family) {
                        json bn = json::object();
                        for (auto [k, v] : fx.family->b_values) bn[std::to_string(k)] = v;
                        j["family"] = {{"b", fx.family->b},
                                       {"e", fx.family->e},
                                       {"ell", fx.family->ell},
                                       {"bn", std::move(bn)}};
                    }
                    arr.push_back(std::move(j));
                }
                out << arr.dump(2) << "\n";
                return 0;
            }
            bool all_pass = true;
            bool found = false;
            json jout = json::array();
            for (const auto& fx : all) {
                if (!vp_fixture.empty() && fx.id != vp_fixture) continue;
                found = true;
                auto outcome = run_fixture(fx, vp_cap);
                all_pass = all_pass && outcome.pass;
                if (vp_json) {
                    json j = {{"id", outcome.id},
                              {"source", fx.source},
                              {"pass", outcome.pass},
                              {"erratum", outcome.erratum},
                              {"diffs", outcome.diffs},
                              {"notes", outcome.notes}};
                    j["report"] = report_to_json(*outcome.result);
                    jout.push_back(std::move(j));
                } else {
                    out << (outcome.pass ? "[pass] " : "[FAIL] ") << outcome.id << "  (" << fx.source
                        << ")" << (outcome.erratum ? "  [erratum]" : "") << "\n";
                    for (const auto& d : outcome.diffs) out << "    diff: " << d << "\n";
                    for (const auto& n : outcome.notes) out << "    note: " << n << "\n";
                }
            }
            if (!found) {
                err << "no fixture with id '" << vp_fixture << "'\n";
                return 1;
            }
            if (vp_json)
                out << jout.dump(2) << "\n";
            else
                out << (all_pass ? "all fixtures pass\n" : "FIXTURE MISMATCHES\n");
            return all_pass ? 0 : 2;
        }
    } catch (const internal_inconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const cap_exceeded& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace nsring::cli
