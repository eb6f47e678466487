#pragma once

/**
 * @file filtration.hpp
 * @brief Filtration invariants of a pair (I, Q): reduction number, index of
 *        nilpotency, the alpha/beta length sequences, Lambda, stretchedness,
 *        Cohen-Macaulay type, Sally-module lengths, and depth of the
 *        associated graded ring (d = 1, so depth is 0 or 1).
 *
 * Q is always the principal monomial reduction (u^v) with v the least
 * valuation of I. The base field is never consulted: every invariant here
 * is a threshold computation. Note that stretchedness is relative to this
 * choice of Q; a different (non-monomial) reduction could in principle give
 * a different answer, which this toolkit does not attempt to detect.
 */

#include <optional>
#include <string>
#include <vector>

#include "nsring/ideal.hpp"

namespace nsring {

struct filtration_report {
    Int v = 0;  ///< least valuation of I; the reduction is Q = (u^v)
    Int r = 0;  ///< reduction number r_I
    Int n = 0;  ///< index of nilpotency n_I
    std::vector<Int> alphas;  ///< alphas[k-1] = l(I^{k+1}/Q I^k),              1 <= k <= r-1
    std::vector<Int> betas;   ///< betas[k-1]  = l(Q I^{k-1} cap I^{k+1}/Q I^k), 1 <= k <= r-1
    std::vector<Int> lambda;  ///< { k >= 1 : beta_k != 0 }, sorted
    std::optional<Int> s_first;  ///< min { k >= 1 : Q cap I^{k+1} != Q I^k }
    bool stretched = false;
    Int tau = 0;       ///< l((Q:I) cap I / Q)
    Int mu_ideal = 0;  ///< mu_A(I) = l(I/mI)
    int depth_g = 1;   ///< depth of G(I); 1 means Cohen-Macaulay
    std::vector<Int> sally;  ///< sally[k-1] = l(I^{k+1}/Q^k I), 1 <= k <= r+1
};

/// Q = (u^v), v the least valuation of I. The canonical monomial minimal
/// reduction; that it reduces I is certified downstream when the reduction
/// iteration stabilizes under the cap.
inline h_ideal minimal_reduction(const h_ideal& i) {
    if (!i.is_proper()) throw unit_ideal{};
    return h_ideal::from_exponents(i.ring_ptr(), {i.min_valuation()});
}

inline Int default_reduction_cap(const h_ideal& i) { return 4 * i.ring().multiplicity(); }

/// r_Q(I) = min { n >= 0 : I^{n+1} = Q I^n }. Once the equality holds it
/// persists (I^{n+2} = I.QI^n = QI^{n+1}), so the first hit is the answer.
inline Int reduction_number(const h_ideal& i, const h_ideal& q, Int cap = 0) {
    h_ideal::require_same_ring(i, q);
    if (cap <= 0) cap = default_reduction_cap(i);
    const Int v = q.min_valuation();
    h_ideal p = h_ideal::unit(i.ring_ptr());
    for (Int k = 0; k <= cap; ++k) {
        h_ideal next = p * i;
        if (next == shift(p, v)) return k;
        p = std::move(next);
    }
    throw cap_exceeded(cap);
}

/// n_Q(I) = min { n >= 0 : I^{n+1} subseteq Q }.
inline Int nilpotency_index(const h_ideal& i, const h_ideal& q) {
    h_ideal::require_same_ring(i, q);
    h_ideal p = i;
    for (Int k = 0;; ++k) {
        if (q.contains(p)) return k;
        p = p * i;
    }
}

struct alpha_beta_result {
    std::vector<Int> alphas, betas, lambda;
    std::optional<Int> s_first;
};

/// The two length sequences, Lambda, and the first failure of the
/// Valabrega-Valla condition, all for 1 <= k <= r (alpha_r = beta_r = 0
/// and are not stored).
inline alpha_beta_result alpha_beta_lambda(const h_ideal& i, const h_ideal& q, Int r) {
    alpha_beta_result out;
    const Int v = q.min_valuation();
    h_ideal below = h_ideal::unit(i.ring_ptr());  // I^{k-1}
    h_ideal prev = i;                             // I^k
    for (Int k = 1; k <= r; ++k) {
        h_ideal cur = prev * i;  // I^{k+1}
        h_ideal qik = shift(prev, v);
        if (k <= r - 1) {
            out.alphas.push_back(length_between(cur, qik));
            Int beta = length_between(intersect(shift(below, v), cur), qik);
            out.betas.push_back(beta);
            if (beta != 0) out.lambda.push_back(k);
        }
        if (!out.s_first && intersect(q, cur) != qik) out.s_first = k;
        below = std::move(prev);
        prev = std::move(cur);
    }
    return out;
}

/// Stretched means Q cap I^2 = QI and l(I^2+Q / I^3+Q) = 1.
inline bool is_stretched(const h_ideal& i, const h_ideal& q) {
    h_ideal i2 = i * i;
    if (intersect(q, i2) != shift(i, q.min_valuation())) return false;
    h_ideal i3 = i2 * i;
    return length_between(i2 + q, i3 + q) == 1;
}

/// tau(I) = l((Q:I) cap I / Q), the Cohen-Macaulay type.
inline Int cm_type(const h_ideal& i, const h_ideal& q) {
    return length_between(intersect(colon(q, i), i), q);
}

/// 1 iff G(I) is Cohen-Macaulay, i.e. Q cap I^{k+1} = Q I^k for all
/// 1 <= k <= r (for k > r the equality is automatic).
inline int depth_assoc_graded(const h_ideal& i, const h_ideal& q, Int r) {
    const Int v = q.min_valuation();
    h_ideal p = i;
    for (Int k = 1; k <= r; ++k) {
        h_ideal cur = p * i;
        if (intersect(q, cur) != shift(p, v)) return 0;
        p = std::move(cur);
    }
    return 1;
}

/// sally[k-1] = l(I^{k+1}/Q^k I); with Q principal, Q^k I is a shift by kv.
inline std::vector<Int> sally_lengths(const h_ideal& i, const h_ideal& q, Int upto) {
    std::vector<Int> out;
    const Int v = q.min_valuation();
    h_ideal p = i * i;
    for (Int k = 1; k <= upto; ++k) {
        out.push_back(length_between(p, shift(i, k * v)));
        if (k < upto) p = p * i;
    }
    return out;
}

namespace detail {

inline void check_stretched_identities(const filtration_report& f) {
    auto fail = [](const std::string& what) { throw internal_inconsistency(what); };
    if (f.r < f.n) fail("r < n");
    if ((f.depth_g == 1) != !f.s_first.has_value()) fail("depth_g vs s disagree");
    if (!f.stretched) return;
    if (f.n < 2 || f.r < 2) fail("stretched with r or n below 2");
    if (!f.alphas.empty() && f.alphas.front() != f.n - 1) fail("alpha_1 != n - 1");
    Int acc = 0, total = 0;
    for (std::size_t k = 0; k < f.alphas.size(); ++k) {
        if (k > 0 && f.alphas[k] > f.alphas[k - 1]) fail("alpha increased");
        if (f.betas[k] < 0 || f.betas[k] > 1) fail("beta outside {0,1}");
        acc += f.betas[k];
        if (f.alphas[k] != f.n - static_cast<Int>(k + 1) + acc) fail("alpha recursion broken");
        total += f.alphas[k];
    }
    if (static_cast<Int>(f.lambda.size()) != f.r - f.n) fail("|Lambda| != r - n");
    Int lam_sum = 0;
    for (Int s : f.lambda) lam_sum += s;
    if (total != f.r * (f.r - 1) / 2 - lam_sum + static_cast<Int>(f.lambda.size()))
        fail("sum of alphas off");
    if (f.r == f.n + 1 && (f.lambda.size() != 1 || !f.s_first || f.lambda[0] != *f.s_first))
        fail("Lambda != {s} at r = n + 1");
}

}  // namespace detail

/// Full report for I with its canonical monomial reduction. The stretched
/// identities (alpha_1 = n-1, monotone alpha, beta <= 1, |Lambda| = r-n,
/// the alpha recursion and the alpha-sum closed form) are theorems for
/// stretched ideals, so any violation is raised as an engine bug.
inline filtration_report analyze(const h_ideal& i, Int cap = 0) {
    filtration_report f;
    h_ideal q = minimal_reduction(i);
    f.v = q.min_valuation();
    f.r = reduction_number(i, q, cap);
    f.n = nilpotency_index(i, q);
    auto abl = alpha_beta_lambda(i, q, f.r);
    f.alphas = std::move(abl.alphas);
    f.betas = std::move(abl.betas);
    f.lambda = std::move(abl.lambda);
    f.s_first = abl.s_first;
    f.stretched = is_stretched(i, q);
    f.tau = cm_type(i, q);
    f.mu_ideal = length_between(i, h_ideal::maximal(i.ring_ptr()) * i);
    f.depth_g = depth_assoc_graded(i, q, f.r);
    f.sally = sally_lengths(i, q, f.r + 1);
    detail::check_stretched_identities(f);
    return f;
}

}  // namespace nsring
