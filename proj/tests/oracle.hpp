#pragma once

// Independent brute-force route for differential tests: semigroups and
// monomial ideals as explicit element bitsets over a window [0, bound].
// Nothing here looks at threshold profiles or Apery tables; products are
// literal sumsets, lengths are popcounts of set differences.

#include <cstdint>
#include <vector>

#include "nsring/semigroup.hpp"

namespace testoracle {

using Int = nsring::Int;

struct bitvec {
    Int bound = 0;
    std::vector<std::uint64_t> w;

    explicit bitvec(Int b = 0) : bound(b), w(static_cast<std::size_t>(b / 64 + 1), 0) {}

    void set(Int i) {
        if (i >= 0 && i <= bound) w[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63);
    }
    bool get(Int i) const {
        if (i < 0 || i > bound) return false;
        return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    }

    // this |= (src << k), truncated at bound
    void or_shifted(const bitvec& src, Int k) {
        const Int word = k >> 6, bit = k & 63;
        for (std::size_t j = src.w.size(); j-- > 0;) {
            std::uint64_t lo = src.w[j] << bit;
            std::uint64_t hi = bit ? (src.w[j] >> (64 - bit)) : 0;
            std::size_t tgt = j + static_cast<std::size_t>(word);
            if (tgt < w.size()) w[tgt] |= lo;
            if (hi && tgt + 1 < w.size()) w[tgt + 1] |= hi;
        }
        clear_tail();
    }

    void clear_tail() {
        Int extra = (static_cast<Int>(w.size()) << 6) - (bound + 1);
        if (extra > 0) w.back() &= ~0ull >> extra;
    }

    friend bitvec operator|(bitvec a, const bitvec& b) {
        for (std::size_t i = 0; i < a.w.size(); ++i) a.w[i] |= b.w[i];
        return a;
    }
    friend bitvec operator&(bitvec a, const bitvec& b) {
        for (std::size_t i = 0; i < a.w.size(); ++i) a.w[i] &= b.w[i];
        return a;
    }
    friend bool operator==(const bitvec& a, const bitvec& b) { return a.w == b.w; }

    bool equal_upto(const bitvec& b, Int m) const {
        for (Int i = 0; i <= m; ++i)
            if (get(i) != b.get(i)) return false;
        return true;
    }

    Int count_diff_upto(const bitvec& b, Int m) const {  // #(this \ b) within [0, m]
        Int c = 0;
        for (Int i = 0; i <= m; ++i) c += get(i) && !b.get(i);
        return c;
    }

    std::vector<Int> elements(Int upto) const {
        std::vector<Int> out;
        for (Int i = 0; i <= std::min(upto, bound); ++i)
            if (get(i)) out.push_back(i);
        return out;
    }
};

inline bitvec semigroup_set(const std::vector<Int>& gens, Int bound) {
    bitvec s(bound);
    s.set(0);
    for (Int x = 1; x <= bound; ++x) {
        for (Int g : gens) {
            if (g <= x && s.get(x - g)) {
                s.set(x);
                break;
            }
        }
    }
    return s;
}

inline bitvec from_exponents(const bitvec& h, const std::vector<Int>& exps) {
    bitvec s(h.bound);
    for (Int g : exps) s.or_shifted(h, g);
    return s;
}

/// The literal sumset {x + y <= bound}.
inline bitvec sumset(const bitvec& a, const bitvec& b) {
    bitvec s(a.bound);
    for (Int x = 0; x <= a.bound; ++x)
        if (a.get(x)) s.or_shifted(b, x);
    return s;
}

inline bitvec power_set(const bitvec& base, Int n, const bitvec& h) {
    if (n == 0) return h;
    bitvec acc = base;
    for (Int k = 1; k < n; ++k) acc = sumset(acc, base);
    return acc;
}

/// Module generators of the ideal-set: elements not reachable from a
/// smaller ideal element by a nonzero semigroup element.
inline std::vector<Int> module_gens(const bitvec& ideal, const bitvec& h) {
    bitvec hpos = h;
    hpos.w[0] &= ~1ull;  // drop 0
    bitvec reach = sumset(ideal, hpos);
    std::vector<Int> out;
    for (Int x = 0; x <= ideal.bound; ++x)
        if (ideal.get(x) && !reach.get(x)) out.push_back(x);
    return out;
}

/// (J : I) cap A as a set; sound and complete for x <= bound - max(gens of I).
inline bitvec colon_set(const bitvec& j, const bitvec& i, const bitvec& h, Int& valid_to) {
    auto gi = module_gens(i, h);
    valid_to = h.bound - (gi.empty() ? 0 : gi.back());
    bitvec out(h.bound);
    for (Int x = 0; x <= valid_to; ++x) {
        if (!h.get(x)) continue;
        bool ok = true;
        for (Int g : gi)
            if (!j.get(x + g)) {
                ok = false;
                break;
            }
        if (ok) out.set(x);
    }
    return out;
}

}  // namespace testoracle
