#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups H = <g_1,...,g_k> with exact Apery-table arithmetic.
 *
 * A numerical semigroup is a cofinite additive submonoid of the nonnegative
 * integers. With e = min H \ {0} (the multiplicity), the Apery table
 * w[i] = min { x in H : x = i (mod e) } determines membership in O(1):
 * x in H iff x >= 0 and x >= w[x mod e].
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <vector>

#include "nsring/errors.hpp"

namespace nsring {

using Int = std::int64_t;

namespace detail {

inline Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

constexpr Int kUnreached = std::numeric_limits<Int>::max() / 4;

/// Shortest-path relaxation over the e residue classes, edge weights = gens.
/// Stabilizes in at most e rounds; classes stay kUnreached when gcd > 1.
inline std::vector<Int> apery_by_relaxation(Int e, const std::vector<Int>& gens) {
    std::vector<Int> w(static_cast<std::size_t>(e), kUnreached);
    w[0] = 0;
    for (Int round = 0; round < e; ++round) {
        bool changed = false;
        for (Int i = 0; i < e; ++i) {
            if (w[static_cast<std::size_t>(i)] == kUnreached) continue;
            for (Int g : gens) {
                Int j = (i + g) % e;
                Int cand = w[static_cast<std::size_t>(i)] + g;
                if (cand < w[static_cast<std::size_t>(j)]) {
                    w[static_cast<std::size_t>(j)] = cand;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    return w;
}

}  // namespace detail

class numerical_semigroup {
  public:
    /// Builds H = <gens>. Requires a nonempty list of positive integers with
    /// gcd 1; redundant generators are accepted and minimalized internally.
    explicit numerical_semigroup(std::vector<Int> gens) {
        if (gens.empty()) throw empty_generators{};
        for (Int g : gens)
            if (g <= 0) throw error("generators must be positive, got " + std::to_string(g));
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        Int g = 0;
        for (Int x : gens) g = std::gcd(g, x);
        if (g != 1) throw not_coprime{g};
        gens_ = std::move(gens);
        apery_ = detail::apery_by_relaxation(gens_.front(), gens_);
        frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - multiplicity();
        compute_minimal_generators();
    }

    Int multiplicity() const { return gens_.front(); }
    const std::vector<Int>& apery() const { return apery_; }
    Int frobenius() const { return frobenius_; }

    /// The (sorted, deduplicated) generator list as given.
    const std::vector<Int>& generators() const { return gens_; }

    /// The unique minimal generating set.
    const std::vector<Int>& minimal_generators() const { return minimal_gens_; }

    /// mu(m), the embedding dimension of k[[H]].
    Int embedding_dimension() const { return static_cast<Int>(minimal_gens_.size()); }

    bool contains(Int x) const {
        if (x < 0) return false;
        return x >= apery_[static_cast<std::size_t>(x % multiplicity())];
    }

    friend bool operator==(const numerical_semigroup& a, const numerical_semigroup& b) {
        return a.apery_ == b.apery_;
    }
    friend bool operator!=(const numerical_semigroup& a, const numerical_semigroup& b) {
        return !(a == b);
    }

    /// Trusted constructor for the enumerator, which maintains the Apery
    /// table incrementally. Cheap structural checks only.
    static numerical_semigroup from_parts(std::vector<Int> gens, std::vector<Int> apery) {
        numerical_semigroup h{private_tag{}};
        h.gens_ = std::move(gens);
        h.apery_ = std::move(apery);
        const Int e = h.multiplicity();
        if (static_cast<Int>(h.apery_.size()) != e || h.apery_[0] != 0)
            throw invalid_ideal("bad apery table");
        for (Int i = 0; i < e; ++i)
            if (h.apery_[static_cast<std::size_t>(i)] % e != i)
                throw invalid_ideal("apery class mismatch");
        h.frobenius_ = *std::max_element(h.apery_.begin(), h.apery_.end()) - e;
        h.compute_minimal_generators();
        return h;
    }

  private:
    struct private_tag {};
    explicit numerical_semigroup(private_tag) {}

    void compute_minimal_generators() {
        minimal_gens_.clear();
        for (Int g : gens_) {
            bool decomposable = false;
            for (Int h : gens_) {
                if (h >= g) break;
                if (contains(g - h)) {  // g = h + (g-h), both nonzero in H
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) minimal_gens_.push_back(g);
        }
    }

    std::vector<Int> gens_, minimal_gens_, apery_;
    Int frobenius_ = 0;
};

using semigroup_ptr = std::shared_ptr<const numerical_semigroup>;

inline semigroup_ptr build_semigroup(std::vector<Int> gens) {
    return std::make_shared<const numerical_semigroup>(std::move(gens));
}

/// Independent enumeration oracle: all nonnegative integer combinations of
/// gens up to bound, by dynamic programming. Makes no use of Apery tables.
inline std::vector<Int> brute_force_elements(const std::vector<Int>& gens, Int bound) {
    std::vector<char> in(static_cast<std::size_t>(std::max<Int>(bound, 0)) + 1, 0);
    if (bound >= 0) in[0] = 1;
    for (Int x = 1; x <= bound; ++x) {
        for (Int g : gens) {
            if (g > 0 && g <= x && in[static_cast<std::size_t>(x - g)]) {
                in[static_cast<std::size_t>(x)] = 1;
                break;
            }
        }
    }
    std::vector<Int> out;
    for (Int x = 0; x <= bound; ++x)
        if (in[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

}  // namespace nsring
