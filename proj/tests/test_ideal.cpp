#include <catch_amalgamated.hpp>

#include <random>

#include "nsring/ideal.hpp"
#include "oracle.hpp"

using namespace nsring;

namespace {

semigroup_ptr ring6() { return build_semigroup({6, 13, 34, 41}); }

// engine ideal as an element bitset, for comparisons with the oracle route
testoracle::bitvec engine_set(const h_ideal& i, Int bound) {
    testoracle::bitvec s(bound);
    for (Int x = 0; x <= bound; ++x)
        if (i.contains(x)) s.set(x);
    return s;
}

struct random_instance {
    semigroup_ptr ring;
    h_ideal a, b;
    testoracle::bitvec hset, aset, bset;
    Int bound;
};

random_instance make_instance(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> epick(2, 12);
    std::vector<Int> gens;
    for (;;) {
        Int e = epick(rng);
        std::uniform_int_distribution<Int> gpick(e + 1, 60);
        std::uniform_int_distribution<int> kpick(1, 3);
        gens = {e};
        int k = kpick(rng);
        for (int i = 0; i < k; ++i) gens.push_back(gpick(rng));
        Int g = 0;
        for (Int x : gens) g = std::gcd(g, x);
        if (g != 1) continue;
        auto ring = build_semigroup(gens);
        auto pick_exps = [&](int count) {
            std::vector<Int> exps;
            std::uniform_int_distribution<Int> xpick(1, ring->frobenius() + 2 * ring->multiplicity());
            while (static_cast<int>(exps.size()) < count) {
                Int x = xpick(rng);
                if (x > 0 && ring->contains(x)) exps.push_back(x);
            }
            return exps;
        };
        std::uniform_int_distribution<int> npick(1, 4);
        auto ea = pick_exps(npick(rng));
        auto eb = pick_exps(npick(rng));
        h_ideal a = h_ideal::from_exponents(ring, ea);
        h_ideal b = h_ideal::from_exponents(ring, eb);
        Int maxt = 0;
        for (Int t : a.thresholds()) maxt = std::max(maxt, t);
        for (Int t : b.thresholds()) maxt = std::max(maxt, t);
        Int bound = ring->frobenius() + 6 * maxt;
        if (bound > 12000) continue;  // keep the bitset window small
        auto hset = testoracle::semigroup_set(gens, bound);
        auto aset = testoracle::from_exponents(hset, ea);
        auto bset = testoracle::from_exponents(hset, eb);
        return {ring, a, b, hset, aset, bset, bound};
    }
}

}  // namespace

TEST_CASE("ideal construction from exponents", "[ideal]") {
    auto ring = ring6();
    h_ideal m = h_ideal::maximal(ring);
    CHECK(m.thresholds() == std::vector<Int>{6, 13, 26, 39, 34, 41});
    h_ideal q = h_ideal::from_exponents(ring, {6});
    CHECK(q.thresholds() == std::vector<Int>{6, 19, 32, 45, 40, 47});
    CHECK_THROWS_AS(h_ideal::from_exponents(ring, {0}), exponent_not_in_semigroup);
    CHECK_THROWS_AS(h_ideal::from_exponents(ring, {7}), exponent_not_in_semigroup);
    CHECK_THROWS_AS(h_ideal::from_exponents(ring, {}), empty_generators);
}

TEST_CASE("threshold invariants are enforced", "[ideal]") {
    auto ring = ring6();
    CHECK_THROWS_AS(h_ideal(ring, {6, 13, 26}), invalid_ideal);            // wrong size
    CHECK_THROWS_AS(h_ideal(ring, {6, 14, 26, 39, 34, 41}), invalid_ideal);  // class mismatch
    CHECK_THROWS_AS(h_ideal(ring, {0, 7, 26, 39, 34, 41}), invalid_ideal);   // below apery
    CHECK_THROWS_AS(h_ideal(ring, {6, 13, 26, 39, 34, 47 + 6 * 50}), invalid_ideal);  // unstable
}

TEST_CASE("product", "[ideal]") {
    auto ring = ring6();
    h_ideal m = h_ideal::maximal(ring);
    h_ideal q = h_ideal::from_exponents(ring, {6});

    // principal factor = plain shift of the profile
    CHECK(q * m == shift(m, 6));

    // m*m equals the ideal generated by all pairwise generator sums
    std::vector<Int> sums;
    for (Int a : ring->generators())
        for (Int b : ring->generators()) sums.push_back(a + b);
    CHECK(m * m == h_ideal::from_exponents(ring, sums));
}

TEST_CASE("power", "[ideal]") {
    auto ring = ring6();
    h_ideal m = h_ideal::maximal(ring);
    CHECK(pow(m, 1) == m);
    CHECK(pow(m, 0) == h_ideal::unit(ring));
    CHECK(colength(pow(m, 3)) == 10);  // 6*3 - 8

    auto ring8 = build_semigroup({7, 15, 18, 26, 27});
    CHECK(colength(pow(h_ideal::maximal(ring8), 3)) == 12);  // 7*3 - 9
}

TEST_CASE("sum and intersection", "[ideal]") {
    auto ring = ring6();
    h_ideal m = h_ideal::maximal(ring);
    h_ideal q = h_ideal::from_exponents(ring, {6});
    CHECK(m + m == m);
    CHECK(intersect(m, m) == m);
    CHECK(intersect(q, pow(m, 2)) == q * m);  // Valabrega-Valla holds here

    auto ring5 = build_semigroup({6, 13, 40, 41});
    h_ideal m5 = h_ideal::maximal(ring5);
    h_ideal q5 = h_ideal::from_exponents(ring5, {6});
    CHECK(q5 + pow(m5, 4) == q5);  // m^4 inside q since the nilpotency index is 3
}

TEST_CASE("colon", "[ideal]") {
    auto ring = ring6();
    h_ideal m = h_ideal::maximal(ring);
    CHECK(colon(m, h_ideal::unit(ring)) == m);

    auto ring8 = build_semigroup({7, 15, 18, 26, 27});
    h_ideal m8 = h_ideal::maximal(ring8);
    h_ideal q8 = h_ideal::from_exponents(ring8, {7});
    CHECK(length_between(intersect(colon(q8, m8), m8), q8) == 2);  // tau = 2
}

TEST_CASE("shift", "[ideal]") {
    auto ring = ring6();
    h_ideal m = h_ideal::maximal(ring);
    h_ideal q = h_ideal::from_exponents(ring, {6});
    CHECK(shift(m, 0) == m);
    CHECK(shift(m, 6) == q * m);
    CHECK(shift(shift(m, 6), 6) == pow(q, 2) * m);
    CHECK_THROWS_AS(shift(m, 7), shift_not_in_semigroup);
}

TEST_CASE("containment and element membership", "[ideal]") {
    auto ring = ring6();
    h_ideal m = h_ideal::maximal(ring);
    CHECK(m.contains(m * m));
    CHECK_FALSE((m * m).contains(m));

    auto ring2 = build_semigroup({6, 13, 33, 34, 41});
    h_ideal m2 = h_ideal::maximal(ring2);
    h_ideal q2 = h_ideal::from_exponents(ring2, {6});
    CHECK((q2 * m2).contains(39));              // u^39 = (u^13)^3 lies in q m
    CHECK_FALSE((q2 * pow(m2, 2)).contains(39));  // but not in q m^2
}

TEST_CASE("lengths", "[ideal]") {
    auto ring = ring6();
    h_ideal m = h_ideal::maximal(ring);
    h_ideal q = h_ideal::from_exponents(ring, {6});
    CHECK(colength(m) == 1);
    CHECK(colength(q) == 6);
    CHECK_THROWS_AS(length_between(m * m, m), not_subideal);
}

TEST_CASE("parent mismatch is rejected", "[ideal]") {
    auto ra = ring6();
    auto rb = build_semigroup({7, 15, 18, 26, 27});
    CHECK_THROWS_AS(h_ideal::maximal(ra) * h_ideal::maximal(rb), parent_mismatch);

    // equal rings built separately are accepted
    auto rc = build_semigroup({6, 13, 34, 41});
    CHECK(h_ideal::maximal(ra) == h_ideal::maximal(rc));
}

TEST_CASE("engine matches the set oracle", "[ideal][property]") {
    std::mt19937_64 rng(777001);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = make_instance(rng);
        const Int b = inst.bound;

        CHECK(engine_set(inst.a * inst.b, b) == testoracle::sumset(inst.aset, inst.bset));
        CHECK(engine_set(inst.a + inst.b, b) == (inst.aset | inst.bset));
        CHECK(engine_set(intersect(inst.a, inst.b), b) == (inst.aset & inst.bset));

        auto p = testoracle::power_set(inst.aset, 4, inst.hset);
        CHECK(engine_set(pow(inst.a, 4), b) == p);

        Int valid_to = 0;
        auto cs = testoracle::colon_set(inst.bset, inst.aset, inst.hset, valid_to);
        auto ec = colon(inst.b, inst.a);
        for (Int x = 0; x <= valid_to; ++x)
            if (ec.contains(x) != cs.get(x)) {
                CAPTURE(trial, x);
                FAIL("colon mismatch");
            }

        // l(I cap J / I J) counted two ways
        h_ideal meet = intersect(inst.a, inst.b);
        h_ideal prod = inst.a * inst.b;
        CHECK(length_between(meet, prod) ==
              (inst.aset & inst.bset).count_diff_upto(testoracle::sumset(inst.aset, inst.bset), b));
    }
}

TEST_CASE("algebraic laws", "[ideal][property]") {
    std::mt19937_64 rng(777002);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = make_instance(rng);
        const h_ideal &a = inst.a, &b = inst.b;
        h_ideal c = a * b;

        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(pow(a, 5) == pow(a, 2) * pow(a, 3));

        // length additivity along I >= I+? chains: K = a*b subseteq J = intersect subseteq I = a
        h_ideal j = intersect(a, b);
        CHECK(length_between(a, c) == length_between(a, j) + length_between(j, c));
    }
}
