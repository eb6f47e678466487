#pragma once

/**
 * @file report_json.hpp
 * @brief The machine-readable report document. Field names are part of the
 *        output contract and are fixed:
 *          semigroup: {generators, apery, frobenius, mu}
 *          ideal: {thresholds}
 *          filtration: {v, r, n, alphas, betas, lambda, s, stretched, tau,
 *                       mu_I, depth_g, sally}
 *          hilbert: {e0, e1, hpoly, postulation, hf}
 *          classification: {case, predictions, match}   (stretched, r <= 5)
 *        All values are exact integers; arrays are in index order.
 *        Documents round-trip: report_from_json(report_to_json(a)) compares
 *        equal to a field by field.
 */

#include <nlohmann/json.hpp>

#include "nsring/analysis.hpp"

namespace nsring {

using json = nlohmann::json;

inline json report_to_json(const analysis& a) {
    const auto& ring = *a.ring;
    const auto& f = a.filt;
    const auto& h = a.hilb;
    json doc;
    doc["semigroup"] = {{"generators", ring.minimal_generators()},
                        {"apery", ring.apery()},
                        {"frobenius", ring.frobenius()},
                        {"mu", ring.embedding_dimension()}};
    doc["ideal"] = {{"thresholds", a.ideal.thresholds()}};
    json filt = {{"v", f.v},       {"r", f.r},
                 {"n", f.n},       {"alphas", f.alphas},
                 {"betas", f.betas}, {"lambda", f.lambda},
                 {"stretched", f.stretched}, {"tau", f.tau},
                 {"mu_I", f.mu_ideal}, {"depth_g", f.depth_g},
                 {"sally", f.sally}};
    filt["s"] = f.s_first ? json(*f.s_first) : json(nullptr);
    doc["filtration"] = std::move(filt);
    doc["hilbert"] = {{"e0", h.e0},
                      {"e1", h.e1},
                      {"hpoly", h.hpoly},
                      {"postulation", h.postulation},
                      {"hf", h.hf}};
    if (a.cls) {
        json cls;
        cls["case"] = a.cls->covered ? a.cls->expected.label : "not covered";
        json pred;
        if (a.cls->covered) {
            pred = {{"n", a.cls->expected.n_i},
                    {"alphas", a.cls->expected.alphas},
                    {"e1", a.hilb.e0 - colength(a.ideal) + a.cls->expected.e1_offset},
                    {"e_higher", a.cls->expected.e_higher},
                    {"graded_cm", a.cls->expected.graded_cm}};
        }
        pred["tau_hypothesis"] = a.cls->tau_hypothesis;
        cls["predictions"] = std::move(pred);
        cls["match"] = a.cls->covered ? json(a.cls->match) : json(nullptr);
        doc["classification"] = std::move(cls);
    }
    return doc;
}

/// Parses a document back. The classification block is derived data and is
/// recomputed rather than parsed.
inline analysis report_from_json(const json& doc) {
    auto ring = build_semigroup(doc.at("semigroup").at("generators").get<std::vector<Int>>());
    h_ideal ideal(ring, doc.at("ideal").at("thresholds").get<std::vector<Int>>());
    analysis a{ring, ideal, {}, {}, {}};

    const auto& jf = doc.at("filtration");
    a.filt.v = jf.at("v").get<Int>();
    a.filt.r = jf.at("r").get<Int>();
    a.filt.n = jf.at("n").get<Int>();
    a.filt.alphas = jf.at("alphas").get<std::vector<Int>>();
    a.filt.betas = jf.at("betas").get<std::vector<Int>>();
    a.filt.lambda = jf.at("lambda").get<std::vector<Int>>();
    if (!jf.at("s").is_null()) a.filt.s_first = jf.at("s").get<Int>();
    a.filt.stretched = jf.at("stretched").get<bool>();
    a.filt.tau = jf.at("tau").get<Int>();
    a.filt.mu_ideal = jf.at("mu_I").get<Int>();
    a.filt.depth_g = jf.at("depth_g").get<int>();
    a.filt.sally = jf.at("sally").get<std::vector<Int>>();

    const auto& jh = doc.at("hilbert");
    a.hilb.e0 = jh.at("e0").get<Int>();
    a.hilb.e1 = jh.at("e1").get<Int>();
    a.hilb.hpoly = jh.at("hpoly").get<std::vector<Int>>();
    a.hilb.postulation = jh.at("postulation").get<Int>();
    a.hilb.hf = jh.at("hf").get<std::vector<Int>>();
    return a;
}

inline bool reports_equal(const analysis& a, const analysis& b) {
    return *a.ring == *b.ring && a.ideal.thresholds() == b.ideal.thresholds() &&
           a.filt.v == b.filt.v && a.filt.r == b.filt.r && a.filt.n == b.filt.n &&
           a.filt.alphas == b.filt.alphas && a.filt.betas == b.filt.betas &&
           a.filt.lambda == b.filt.lambda && a.filt.s_first == b.filt.s_first &&
           a.filt.stretched == b.filt.stretched && a.filt.tau == b.filt.tau &&
           a.filt.mu_ideal == b.filt.mu_ideal && a.filt.depth_g == b.filt.depth_g &&
           a.filt.sally == b.filt.sally && a.hilb.e0 == b.hilb.e0 && a.hilb.e1 == b.hilb.e1 &&
           a.hilb.hpoly == b.hilb.hpoly && a.hilb.postulation == b.hilb.postulation &&
           a.hilb.hf == b.hilb.hf;
}

}  // namespace nsring
