#pragma once

/**
 * @file ideal.hpp
 * @brief Exact arithmetic of m-primary monomial ideals of k[[H]].
 *
 * A monomial ideal J is stored by its e per-residue-class minima
 * ("thresholds"): t[i] = min { x in J : x = i (mod e) }. As a set,
 * J = union_i { t[i] + k e : k >= 0 }, so products become min-plus cyclic
 * convolutions, sums become pointwise minima, intersections pointwise
 * maxima, and lengths telescoping differences. Everything is closed-form
 * and exact; there is no truncation bound anywhere.
 */

#include <utility>
#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

class h_ideal {
  public:
    h_ideal(semigroup_ptr ring, std::vector<Int> thresholds)
        : ring_(std::move(ring)), t_(std::move(thresholds)) {
        validate();
    }

    /// The smallest H-ideal containing u^g for every exponent g, i.e. the
    /// union of the translates g + H: t[i] = min_g (g + apery[(i-g) mod e]).
    static h_ideal from_exponents(const semigroup_ptr& ring, const std::vector<Int>& exps) {
        if (exps.empty()) throw empty_generators{};
        const Int e = ring->multiplicity();
        const auto& w = ring->apery();
        for (Int g : exps) {
            if (g <= 0 || !ring->contains(g)) throw exponent_not_in_semigroup(g);
        }
        std::vector<Int> t(static_cast<std::size_t>(e), detail::kUnreached);
        for (Int g : exps) {
            for (Int i = 0; i < e; ++i) {
                Int cand = g + w[static_cast<std::size_t>(detail::floor_mod(i - g, e))];
                auto& slot = t[static_cast<std::size_t>(i)];
                if (cand < slot) slot = cand;
            }
        }
        return h_ideal(ring, std::move(t));
    }

    /// The unit ideal A (thresholds = Apery table).
    static h_ideal unit(const semigroup_ptr& ring) { return h_ideal(ring, ring->apery()); }

    /// The maximal ideal m = (u^g : g a minimal generator).
    static h_ideal maximal(const semigroup_ptr& ring) {
        return from_exponents(ring, ring->minimal_generators());
    }

    const numerical_semigroup& ring() const { return *ring_; }
    const semigroup_ptr& ring_ptr() const { return ring_; }
    const std::vector<Int>& thresholds() const { return t_; }

    /// Least valuation occurring in the ideal; equals e_0(I) for m-primary I.
    Int min_valuation() const { return *std::min_element(t_.begin(), t_.end()); }

    bool contains(Int x) const {
        if (x < 0) return false;
        return x >= t_[static_cast<std::size_t>(x % ring_->multiplicity())];
    }

    /// J subseteq *this, i.e. every threshold of J dominates ours classwise.
    bool contains(const h_ideal& j) const {
        require_same_ring(*this, j);
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (j.t_[i] < t_[i]) return false;
        return true;
    }

    bool is_unit() const { return t_ == ring_->apery(); }

    /// I subseteq m, equivalently 0 not in I.
    bool is_proper() const { return t_[0] != 0; }

    friend bool operator==(const h_ideal& a, const h_ideal& b) {
        require_same_ring(a, b);
        return a.t_ == b.t_;
    }
    friend bool operator!=(const h_ideal& a, const h_ideal& b) { return !(a == b); }

    static void require_same_ring(const h_ideal& a, const h_ideal& b) {
        if (a.ring_ == b.ring_) return;
        if (*a.ring_ != *b.ring_) throw parent_mismatch{};
    }

  private:
    void validate() const {
        const Int e = ring_->multiplicity();
        const auto& w = ring_->apery();
        if (static_cast<Int>(t_.size()) != e) throw invalid_ideal("threshold count != e");
        for (Int i = 0; i < e; ++i) {
            Int ti = t_[static_cast<std::size_t>(i)];
            if (ti % e != i) throw invalid_ideal("threshold class mismatch");
            if (ti < w[static_cast<std::size_t>(i)]) throw invalid_ideal("not contained in the ring");
        }
        for (Int g : ring_->minimal_generators()) {
            for (Int i = 0; i < e; ++i) {
                Int j = (i + g) % e;
                if (t_[static_cast<std::size_t>(j)] > t_[static_cast<std::size_t>(i)] + g)
                    throw invalid_ideal("not H-stable");
            }
        }
    }

    semigroup_ptr ring_;
    std::vector<Int> t_;
};

/// Product I.J: min-plus cyclic convolution of the threshold profiles.
/// Exact: each element of I.J is a sum x + y dominating some threshold
/// pair, and every threshold-pair sum lies in I.J.
inline h_ideal operator*(const h_ideal& a, const h_ideal& b) {
    h_ideal::require_same_ring(a, b);
    const Int e = a.ring().multiplicity();
    const auto& ta = a.thresholds();
    const auto& tb = b.thresholds();
    std::vector<Int> t(static_cast<std::size_t>(e), detail::kUnreached);
    for (Int i = 0; i < e; ++i) {
        for (Int j = 0; j < e; ++j) {
            Int c = (i + j) % e;
            Int cand = ta[static_cast<std::size_t>(i)] + tb[static_cast<std::size_t>(j)];
            auto& slot = t[static_cast<std::size_t>(c)];
            if (cand < slot) slot = cand;
        }
    }
    return h_ideal(a.ring_ptr(), std::move(t));
}

/// I^n by iterated products; n = 0 gives the unit ideal. n stays small
/// (at most r_I + 2 in every caller) so no fast exponentiation.
inline h_ideal pow(const h_ideal& a, Int n) {
    if (n < 0) throw error("negative ideal power");
    h_ideal acc = h_ideal::unit(a.ring_ptr());
    for (Int k = 0; k < n; ++k) acc = acc * a;
    return acc;
}

/// Module sum I + J: classwise minimum.
inline h_ideal operator+(const h_ideal& a, const h_ideal& b) {
    h_ideal::require_same_ring(a, b);
    std::vector<Int> t(a.thresholds());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::min(t[i], b.thresholds()[i]);
    return h_ideal(a.ring_ptr(), std::move(t));
}

/// Intersection: classwise maximum.
inline h_ideal intersect(const h_ideal& a, const h_ideal& b) {
    h_ideal::require_same_ring(a, b);
    std::vector<Int> t(a.thresholds());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::max(t[i], b.thresholds()[i]);
    return h_ideal(a.ring_ptr(), std::move(t));
}

/// Colon (J : I) intersected with A. In class c the least x with
/// x + I subseteq J is max_i (tJ[(c+i) mod e] - tI[i]); forcing the result
/// into the ring is a classwise max with the Apery table.
inline h_ideal colon(const h_ideal& j, const h_ideal& i) {
    h_ideal::require_same_ring(j, i);
    const Int e = j.ring().multiplicity();
    const auto& tj = j.thresholds();
    const auto& ti = i.thresholds();
    const auto& w = j.ring().apery();
    std::vector<Int> t(static_cast<std::size_t>(e));
    for (Int c = 0; c < e; ++c) {
        Int best = w[static_cast<std::size_t>(c)];
        for (Int k = 0; k < e; ++k) {
            Int need = tj[static_cast<std::size_t>((c + k) % e)] - ti[static_cast<std::size_t>(k)];
            if (need > best) best = need;
        }
        t[static_cast<std::size_t>(c)] = best;
    }
    return h_ideal(j.ring_ptr(), std::move(t));
}

/// u^c . I for c in H; realizes Q^n I = nv + I for principal Q = (u^v).
inline h_ideal shift(const h_ideal& a, Int c) {
    if (!a.ring().contains(c)) throw shift_not_in_semigroup(c);
    const Int e = a.ring().multiplicity();
    std::vector<Int> t(static_cast<std::size_t>(e));
    for (Int i = 0; i < e; ++i)
        t[static_cast<std::size_t>((i + c) % e)] = a.thresholds()[static_cast<std::size_t>(i)] + c;
    return h_ideal(a.ring_ptr(), std::move(t));
}

/// l(I/J) for J subseteq I: class i contributes one basis monomial per
/// step of e between the two thresholds.
inline Int length_between(const h_ideal& i, const h_ideal& j) {
    h_ideal::require_same_ring(i, j);
    if (!i.contains(j)) throw not_subideal{};
    const Int e = i.ring().multiplicity();
    Int total = 0;
    for (std::size_t k = 0; k < i.thresholds().size(); ++k)
        total += (j.thresholds()[k] - i.thresholds()[k]) / e;
    return total;
}

/// l(A/I).
inline Int colength(const h_ideal& i) {
    return length_between(h_ideal::unit(i.ring_ptr()), i);
}

/// Exponents of a minimal A-module generating set of I: a threshold is a
/// generator unless it is another threshold plus a nonzero H-element.
inline std::vector<Int> module_generators(const h_ideal& i) {
    std::vector<Int> out;
    for (Int t : i.thresholds()) {
        bool generated = false;
        for (Int s : i.thresholds()) {
            if (s < t && i.ring().contains(t - s)) {
                generated = true;
                break;
            }
        }
        if (!generated) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nsring
