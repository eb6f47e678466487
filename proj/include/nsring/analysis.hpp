#pragma once

/// Bundles the per-ideal pipeline: filtration invariants, Hilbert data, and
/// (for stretched instances with r <= 5) the small-reduction classification.

#include <optional>

#include "nsring/formula.hpp"
#include "nsring/hilbert.hpp"

namespace nsring {

struct analysis {
    semigroup_ptr ring;
    h_ideal ideal;
    filtration_report filt;
    hilbert_data hilb;
    std::optional<classification_result> cls;
};

inline stretched_profile profile_from(const filtration_report& f, const hilbert_data& h,
                                      Int colen_i, Int d = 1) {
    stretched_profile p;
    p.d = d;
    p.e0 = h.e0;
    p.colen_i = colen_i;
    p.n_i = f.n;
    p.r = f.r;
    p.s = f.s_first;
    p.tau = f.tau;
    p.mu = f.mu_ideal;
    return p;
}

inline analysis analyze_full(const h_ideal& i, Int cap = 0) {
    analysis a{i.ring_ptr(), i, {}, {}, {}};
    a.filt = analyze(i, cap);
    h_ideal q = minimal_reduction(i);
    a.hilb = compute_hilbert(i, q, cap);
    if (a.filt.stretched && a.filt.r >= 2 && a.filt.r <= 5) {
        auto p = profile_from(a.filt, a.hilb, colength(i));
        a.cls = classify_small_reduction(a.filt, p, a.hilb.e1);
    }
    return a;
}

inline analysis analyze_semigroup(const semigroup_ptr& ring, Int cap = 0) {
    return analyze_full(h_ideal::maximal(ring), cap);
}

}  // namespace nsring
