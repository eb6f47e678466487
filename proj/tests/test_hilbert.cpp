#include <catch_amalgamated.hpp>

#include <random>

#include "nsring/analysis.hpp"

using namespace nsring;

namespace {

analysis full(std::initializer_list<Int> gens) {
    return analyze_semigroup(build_semigroup(std::vector<Int>(gens)));
}

}  // namespace

TEST_CASE("hilbert function values", "[hilbert]") {
    auto ring = build_semigroup({7, 15, 18, 26, 27});
    h_ideal m = h_ideal::maximal(ring);
    CHECK(hilbert_function(m, 2) == 12);  // 7*3 - 9
    CHECK(hilbert_function(m, 0) == 1);

    auto ring3 = build_semigroup({6, 13, 41});
    CHECK(hilbert_function(h_ideal::maximal(ring3), 3) == 13);  // 6*4 - 11
}

TEST_CASE("hilbert data on the worked examples", "[hilbert]") {
    {
        auto a = full({7, 15, 18, 26, 27});
        CHECK(a.hilb.e0 == 7);
        CHECK(a.hilb.e1 == 9);
        CHECK(a.hilb.hpoly == std::vector<Int>{1, 4, 1, 1});
        CHECK(a.hilb.postulation == 2);
        CHECK(a.hilb.hf == std::vector<Int>{1, 6, 12, 19, 26, 33});
    }
    {
        auto a = full({8, 17, 21, 30, 39, 52});
        CHECK(a.hilb.e0 == 8);
        CHECK(a.hilb.e1 == 11);
        CHECK(a.hilb.hpoly == std::vector<Int>{1, 5, 1, 0, 1});
    }
    {
        auto a = full({6, 13, 33, 34, 41});
        CHECK(a.hilb.hpoly == std::vector<Int>{1, 4, 0, 1});  // degree-s slot vanishes
        CHECK(a.hilb.e1 == 7);
    }
    {
        auto a = full({10, 21, 26, 37, 48, 59, 64, 75});
        CHECK(a.hilb.e0 == 10);
        CHECK(a.hilb.e1 == 14);
        CHECK(a.hilb.hpoly == std::vector<Int>{1, 7, 1, 0, 0, 1});
    }
}

TEST_CASE("principal ideal hilbert data", "[hilbert]") {
    auto ring = build_semigroup({6, 13, 34, 41});
    h_ideal q = h_ideal::from_exponents(ring, {6});
    auto h = compute_hilbert(q, minimal_reduction(q));
    CHECK(h.e0 == 6);
    CHECK(h.e1 == 0);
    CHECK(h.hpoly == std::vector<Int>{6});
    CHECK(h.postulation == 0);
}

TEST_CASE("hilbert invariants on random instances", "[hilbert][property]") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<Int> epick(2, 10);
    int done = 0;
    while (done < 60) {
        Int e = epick(rng);
        std::uniform_int_distribution<Int> gpick(e + 1, 55);
        std::vector<Int> gens = {e, gpick(rng), gpick(rng)};
        Int g = std::gcd(std::gcd(gens[0], gens[1]), gens[2]);
        if (g != 1) continue;
        ++done;
        auto ring = build_semigroup(gens);
        analysis a = analyze_semigroup(ring);  // dual e1 check runs inside

        CHECK(a.hilb.e0 == a.filt.v);
        Int sum = 0;
        for (Int c : a.hilb.hpoly) sum += c;
        CHECK(sum == a.hilb.e0);

        // strictly increasing, eventually arithmetic with difference e0
        for (std::size_t k = 1; k < a.hilb.hf.size(); ++k) CHECK(a.hilb.hf[k] > a.hilb.hf[k - 1]);
        for (std::size_t k = static_cast<std::size_t>(a.filt.r) + 1; k < a.hilb.hf.size(); ++k)
            CHECK(a.hilb.hf[k] - a.hilb.hf[k - 1] == a.hilb.e0);
    }
}

TEST_CASE("stretched h-polynomials follow the closed forms", "[hilbert]") {
    // r = n instances: support {0,1} union [2, n]
    for (auto gens : {std::vector<Int>{7, 15, 18, 26, 27}, std::vector<Int>{9, 19, 42, 52, 53},
                      std::vector<Int>{6, 13, 41}}) {
        auto a = analyze_semigroup(build_semigroup(gens));
        REQUIRE(a.filt.stretched);
        REQUIRE(a.filt.r == a.filt.n);
        auto p = profile_from(a.filt, a.hilb, colength(a.ideal));
        auto cf = predict_cor42(p);
        CHECK(a.hilb.hpoly == cf.hpoly);
        CHECK(a.hilb.e1 == cf.e[0]);
        CHECK(a.filt.depth_g == 1);
    }
    // r = n + 1 instances: degree n+1 with the degree-s slot removed
    for (auto gens : {std::vector<Int>{6, 13, 33, 34, 41}, std::vector<Int>{6, 13, 40, 41},
                      std::vector<Int>{9, 19, 33, 43, 53, 68}}) {
        auto a = analyze_semigroup(build_semigroup(gens));
        REQUIRE(a.filt.stretched);
        REQUIRE(a.filt.r == a.filt.n + 1);
        auto p = profile_from(a.filt, a.hilb, colength(a.ideal));
        auto cf = predict_theorem11(p);
        CHECK(a.hilb.hpoly == cf.hpoly);
        CHECK(a.hilb.e1 == cf.e[0]);
        CHECK(a.filt.depth_g == 0);
        CHECK(a.hilb.postulation <= a.filt.n);
    }
}
