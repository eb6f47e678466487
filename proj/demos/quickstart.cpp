// Library walkthrough: build a ring, take its maximal ideal, and read off
// the filtration and Hilbert invariants.

#include <iostream>

#include "nsring/analysis.hpp"

int main() {
    using namespace nsring;

    auto ring = build_semigroup({7, 15, 18, 26, 27});
    std::cout << "H = <7,15,18,26,27>, frobenius " << ring->frobenius() << ", mu "
              << ring->embedding_dimension() << "\n";

    h_ideal m = h_ideal::maximal(ring);
    h_ideal q = minimal_reduction(m);
    std::cout << "Q = (u^" << q.min_valuation() << "), r = " << reduction_number(m, q)
              << ", n = " << nilpotency_index(m, q) << ", stretched = " << is_stretched(m, q)
              << ", tau = " << cm_type(m, q) << "\n";

    analysis a = analyze_full(m);
    std::cout << "e0 = " << a.hilb.e0 << ", e1 = " << a.hilb.e1 << ", depth G = " << a.filt.depth_g
              << "\n";

    // ideal arithmetic is exact and closed-form on threshold profiles
    std::cout << "l(A/m^3) = " << colength(pow(m, 3)) << ", m^4 = Q m^3 holds: "
              << (pow(m, 4) == q * pow(m, 3)) << "\n";
    return 0;
}
