#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive enumeration of numerical semigroups within bounds.
 *
 * The enumerator walks increasing minimal generator tuples: a candidate c
 * extends <g_1,...,g_k> exactly when c is not already in the semigroup, so
 * every semigroup with multiplicity <= max_e and minimal generators
 * <= max_gen is produced exactly once, in lexicographic tuple order. The
 * Apery table is maintained incrementally (classes unreachable while
 * gcd > 1 carry a sentinel); a tuple is emitted once its gcd reaches 1.
 *
 * Work is partitioned into (multiplicity, second generator) subtrees.
 * Workers claim subtrees from a shared counter, so visitor calls run
 * concurrently, but run_search buffers hits per subtree and concatenates
 * in subtree order: its output does not depend on the worker count.
 */

#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

#include "nsring/analysis.hpp"

namespace nsring {

struct search_bounds {
    Int max_e = 8;
    Int max_gen = 40;
    Int max_gens_count = 0;  ///< 0 = no bound (at most e generators anyway)
};

/// Worker count: explicit argument, else NSRING_WORKERS, else hardware.
inline unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NSRING_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace detail {

struct dfs_state {
    Int e = 0;
    Int max_gen = 0;
    Int max_count = 0;
    std::vector<Int> gens;
    std::vector<Int> apery;  // kUnreached marks classes not yet hit
    Int gcd = 0;
};

template <typename Fn>
void enumerate_from(dfs_state& st, const Fn& fn) {
    if (st.gcd == 1) {
        fn(std::make_shared<const numerical_semigroup>(
            numerical_semigroup::from_parts(st.gens, st.apery)));
    }
    if (st.max_count > 0 && static_cast<Int>(st.gens.size()) >= st.max_count) return;
    const Int e = st.e;
    std::vector<Int> saved;
    for (Int c = st.gens.back() + 1; c <= st.max_gen; ++c) {
        if (c >= st.apery[static_cast<std::size_t>(c % e)]) continue;  // c already in H
        saved = st.apery;
        auto& w = st.apery;
        w[static_cast<std::size_t>(c % e)] = c;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Int i = 0; i < e; ++i) {
                if (w[static_cast<std::size_t>(i)] >= kUnreached) continue;
                Int j = (i + c) % e;
                Int cand = w[static_cast<std::size_t>(i)] + c;
                if (cand < w[static_cast<std::size_t>(j)]) {
                    w[static_cast<std::size_t>(j)] = cand;
                    changed = true;
                }
            }
        }
        st.gens.push_back(c);
        Int old_gcd = st.gcd;
        st.gcd = std::gcd(st.gcd, c);
        enumerate_from(st, fn);
        st.gcd = old_gcd;
        st.gens.pop_back();
        st.apery = saved;
    }
}

struct subtree {
    Int e = 0;
    Int g2 = 0;  // 0 = the bare tuple <e> (only <1> is coprime)
};

inline std::vector<subtree> make_subtrees(const search_bounds& b) {
    std::vector<subtree> out;
    for (Int e = 1; e <= b.max_e; ++e) {
        if (e > b.max_gen) break;
        if (e == 1) {
            out.push_back({1, 0});
            continue;
        }
        if (b.max_gens_count == 1) continue;
        for (Int g2 = e + 1; g2 <= b.max_gen; ++g2)
            if (g2 % e != 0) out.push_back({e, g2});
    }
    return out;
}

template <typename Fn>
void run_subtree(const search_bounds& b, const subtree& t, const Fn& fn) {
    dfs_state st;
    st.e = t.e;
    st.max_gen = b.max_gen;
    st.max_count = b.max_gens_count;
    st.gens = {t.e};
    st.apery.assign(static_cast<std::size_t>(t.e), kUnreached);
    st.apery[0] = 0;
    st.gcd = t.e;
    if (t.g2 == 0) {
        if (st.gcd == 1)
            fn(std::make_shared<const numerical_semigroup>(
                numerical_semigroup::from_parts(st.gens, st.apery)));
        return;
    }
    // push g2 and recurse
    auto& w = st.apery;
    w[static_cast<std::size_t>(t.g2 % t.e)] = t.g2;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Int i = 0; i < t.e; ++i) {
            if (w[static_cast<std::size_t>(i)] >= kUnreached) continue;
            Int j = (i + t.g2) % t.e;
            Int cand = w[static_cast<std::size_t>(i)] + t.g2;
            if (cand < w[static_cast<std::size_t>(j)]) {
                w[static_cast<std::size_t>(j)] = cand;
                changed = true;
            }
        }
    }
    st.gens.push_back(t.g2);
    st.gcd = std::gcd(st.gcd, t.g2);
    enumerate_from(st, fn);
}

}  // namespace detail

/// Visits every numerical semigroup within the bounds exactly once. The
/// visitor runs concurrently on `workers` threads; it must be thread-safe.
/// Visit order is unspecified (use run_search for deterministic output).
inline void for_each_semigroup(const search_bounds& bounds, unsigned workers,
                               const std::function<void(const semigroup_ptr&)>& fn) {
    auto subtrees = detail::make_subtrees(bounds);
    workers = std::max(1u, std::min<unsigned>(resolve_workers(workers),
                                              static_cast<unsigned>(subtrees.size() ? subtrees.size() : 1)));
    if (workers == 1) {
        for (const auto& t : subtrees) detail::run_subtree(bounds, t, fn);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned wi = 0; wi < workers; ++wi) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= subtrees.size()) return;
                detail::run_subtree(bounds, subtrees[k], fn);
            }
        });
    }
    for (auto& th : pool) th.join();
}

struct search_spec {
    search_bounds bounds;
    std::function<bool(const analysis&)> predicate;  ///< empty = accept all
    Int limit = 0;                                   ///< 0 = unlimited
    Int cap = 0;                                     ///< reduction cap override
};

struct search_hit {
    std::vector<Int> gens;
    analysis result;
};

/// Analyzes the maximal ideal of every semigroup in the bounds, keeps those
/// matching the predicate, and returns them in lexicographic generator-tuple
/// order regardless of worker count.
inline std::vector<search_hit> run_search(const search_spec& spec, unsigned workers = 0) {
    auto subtrees = detail::make_subtrees(spec.bounds);
    std::vector<std::vector<search_hit>> buckets(subtrees.size());
    unsigned w = std::max(1u, std::min<unsigned>(resolve_workers(workers),
                                                 static_cast<unsigned>(subtrees.size() ? subtrees.size() : 1)));
    auto work = [&](std::size_t k) {
        detail::run_subtree(spec.bounds, subtrees[k], [&](const semigroup_ptr& ring) {
            analysis a = analyze_semigroup(ring, spec.cap);
            if (!spec.predicate || spec.predicate(a))
                buckets[k].push_back({ring->minimal_generators(), std::move(a)});
        });
    };
    if (w == 1) {
        for (std::size_t k = 0; k < subtrees.size(); ++k) work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned wi = 0; wi < w; ++wi) {
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= subtrees.size()) return;
                    work(k);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<search_hit> out;
    for (auto& bucket : buckets) {
        for (auto& hit : bucket) {
            out.push_back(std::move(hit));
            if (spec.limit > 0 && static_cast<Int>(out.size()) >= spec.limit) return out;
        }
    }
    return out;
}

}  // namespace nsring
