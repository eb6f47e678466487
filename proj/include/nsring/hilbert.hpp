#pragma once

/**
 * @file hilbert.hpp
 * @brief Exact Hilbert function, h-polynomial and coefficients e_0, e_1 at
 *        d = 1, with two independent computations of e_1 that must agree.
 *
 * The series l(I^n/I^{n+1}) stabilizes at e_0 for n >= r (I^{n+1} = Q I^n
 * with Q principal of value e_0), so the h-polynomial truncates at degree r.
 * e_1 is extracted from the h-polynomial and recomputed as
 * l(I/Q) + sum_k l(I^{k+1}/Q I^k); disagreement is an engine bug and is
 * raised as internal_inconsistency (CLI exit status 3).
 */

#include <vector>

#include "nsring/filtration.hpp"

namespace nsring {

struct hilbert_data {
    Int e0 = 0;
    Int e1 = 0;
    std::vector<Int> hpoly;  ///< coefficients of h_I(z), degree 0 first
    Int postulation = 0;     ///< least N with l(A/I^{n+1}) = e0 (n+1) - e1 for n >= N
    std::vector<Int> hf;     ///< hf[n] = l(A/I^{n+1}) for 0 <= n <= r+2
};

/// l(A/I^{n+1}).
inline Int hilbert_function(const h_ideal& i, Int n) { return colength(pow(i, n + 1)); }

inline hilbert_data compute_hilbert(const h_ideal& i, const h_ideal& q, Int cap = 0) {
    h_ideal::require_same_ring(i, q);
    const Int r = reduction_number(i, q, cap);
    const Int v = q.min_valuation();

    std::vector<h_ideal> p;  // p[k] = I^k, k = 0..r+3
    p.reserve(static_cast<std::size_t>(r) + 4);
    p.push_back(h_ideal::unit(i.ring_ptr()));
    for (Int k = 1; k <= r + 3; ++k) p.push_back(p.back() * i);

    hilbert_data out;
    out.e0 = v;
    for (Int n = 0; n <= r + 2; ++n)
        out.hf.push_back(colength(p[static_cast<std::size_t>(n + 1)]));

    std::vector<Int> series;  // l(I^n/I^{n+1}), n = 0..r
    for (Int n = 0; n <= r; ++n)
        series.push_back(length_between(p[static_cast<std::size_t>(n)],
                                        p[static_cast<std::size_t>(n + 1)]));
    if (series.back() != out.e0)
        throw internal_inconsistency("series did not stabilize at e0 by degree r");

    out.hpoly.push_back(series[0]);
    for (Int n = 1; n <= r; ++n)
        out.hpoly.push_back(series[static_cast<std::size_t>(n)] -
                            series[static_cast<std::size_t>(n - 1)]);
    while (out.hpoly.size() > 1 && out.hpoly.back() == 0) out.hpoly.pop_back();

    Int sum = 0;
    for (std::size_t j = 0; j < out.hpoly.size(); ++j) {
        sum += out.hpoly[j];
        out.e1 += static_cast<Int>(j) * out.hpoly[j];
    }
    if (sum != out.e0) throw internal_inconsistency("h(1) != e0");

    // second, independent route: e1 = l(I/Q) + sum of the alpha lengths
    Int e1_alt = length_between(i, q);
    for (Int k = 1; k <= r - 1; ++k)
        e1_alt += length_between(p[static_cast<std::size_t>(k + 1)],
                                 shift(p[static_cast<std::size_t>(k)], v));
    if (e1_alt != out.e1)
        throw internal_inconsistency("dual e1 computations disagree: " +
                                     std::to_string(out.e1) + " vs " + std::to_string(e1_alt));

    Int post = 0;
    for (Int n = r + 2; n >= 0; --n) {
        if (out.hf[static_cast<std::size_t>(n)] != out.e0 * (n + 1) - out.e1) {
            post = n + 1;
            break;
        }
    }
    Int deg = static_cast<Int>(out.hpoly.size()) - 1;
    if (post > std::max<Int>(deg - 1, 0))
        throw internal_inconsistency("postulation beyond deg(h) - 1");
    out.postulation = post;

    for (std::size_t n = 1; n < out.hf.size(); ++n)
        if (out.hf[n] <= out.hf[n - 1])
            throw internal_inconsistency("Hilbert function not strictly increasing");

    return out;
}

}  // namespace nsring
