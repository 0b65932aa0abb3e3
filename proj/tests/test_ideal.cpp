#include <doctest.h>

#include <algorithm>

#include "finalg/error.hpp"
#include "finalg/ideal.hpp"

using namespace finalg;

TEST_CASE("ideals of Z6") {
    RingPtr z6 = make_cyclic_ring(6);
    std::vector<Ideal> all = enumerate_ideals(z6);
    REQUIRE(all.size() == 4);
    CHECK(all[0].members == SubSet::of(6, {0}));
    CHECK(all[1].members == SubSet::of(6, {0, 3}));
    CHECK(all[2].members == SubSet::of(6, {0, 2, 4}));
    CHECK(all[3].members.is_full());

    CHECK(is_prime_ideal(z6, all[1]));
    CHECK(is_prime_ideal(z6, all[2]));
    CHECK_FALSE(is_prime_ideal(z6, all[0]));          // 2*3 = 0
    CHECK_THROWS_AS(is_prime_ideal(z6, all[3]), error); // not proper
    CHECK(ring_prime_radical(z6) == SubSet::of(6, {0}));
}

TEST_CASE("enumeration output is sorted canonically") {
    for (int n : {6, 8, 12}) {
        std::vector<Ideal> all = enumerate_ideals(make_cyclic_ring(n));
        for (std::size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(SubSet::canonical_less(all[i].members, all[i + 1].members));
    }
}

TEST_CASE("U2(F2) has five two-sided ideals") {
    RingPtr u = make_matrix_ring(2, 2, true);
    std::vector<Ideal> all = enumerate_ideals(u);
    CHECK(all.size() == 5);
    for (const Ideal& i : all) validate_ideal(i); // invariant, not a tautology: re-checks closure
}

TEST_CASE("U2(F2) radicals: sqrt(0) = beta = beta_co = {0, E12}, 2-primal") {
    RingPtr u = make_matrix_ring(2, 2, true);
    SubSet nil = SubSet::of(8, {0, 2}); // strictly upper triangular part
    CHECK(sqrt_ideal(u, SubSet::single(8, 0)) == nil);
    CHECK(ring_prime_radical(u) == nil);
    CHECK(ring_completely_prime_radical(u) == nil);
    CHECK(is_2primal_ring(u));
}

TEST_CASE("M2(F2) is simple, semiprimitive and not 2-primal") {
    RingPtr m = make_matrix_ring(2, 2, false);
    std::vector<Ideal> all = enumerate_ideals(m);
    CHECK(all.size() == 2); // {0} and the whole ring
    SubSet nil = sqrt_ideal(m, SubSet::single(16, 0));
    CHECK(nil.count() == 4);
    CHECK(nil == SubSet::of(16, {0, 2, 4, 15}));
    CHECK(ring_prime_radical(m) == SubSet::single(16, 0));
    // no completely prime ideal exists, so beta_co is the whole ring
    CHECK(ring_completely_prime_radical(m).is_full());
    CHECK_FALSE(is_2primal_ring(m));
    CHECK(jacobson_radical(m).members == SubSet::single(16, 0));
}

TEST_CASE("sqrt(0) in Z4 is {0,2}; Z4 is 2-primal") {
    RingPtr z4 = make_cyclic_ring(4);
    CHECK(sqrt_ideal(z4, SubSet::single(4, 0)) == SubSet::of(4, {0, 2}));
    CHECK(is_2primal_ring(z4));
    CHECK(jacobson_radical(z4).members == SubSet::of(4, {0, 2}));
}

TEST_CASE("completely prime vs prime in M2(F2)") {
    RingPtr m = make_matrix_ring(2, 2, false);
    Ideal zero{m, SubSet::single(16, 0)};
    CHECK(is_prime_ideal(m, zero));
    CHECK_FALSE(is_completely_prime_ideal(m, zero)); // E12 * E12 = 0
}

TEST_CASE("completely prime implies prime on every ideal of sample rings") {
    for (RingPtr r : {make_cyclic_ring(12), make_matrix_ring(2, 2, true),
                      make_product_ring(make_cyclic_ring(2), make_cyclic_ring(4))}) {
        std::vector<Ideal> all = enumerate_ideals(r);
        for (const Ideal& i : all) {
            if (i.members.is_full()) continue;
            if (is_completely_prime_ideal(r, i)) CHECK(is_prime_ideal(r, i, all));
        }
    }
}

TEST_CASE("ideal_generated and ideal arithmetic in Z12") {
    RingPtr z = make_cyclic_ring(12);
    Ideal i8 = ideal_generated(z, SubSet::single(12, 8));
    CHECK(i8.members == SubSet::of(12, {0, 4, 8}));
    SubSet i6 = SubSet::of(12, {0, 6});
    CHECK(ideal_sum(*z, i8.members, i6) == SubSet::of(12, {0, 2, 4, 6, 8, 10}));
    CHECK(ideal_product(*z, i8.members, i6) == SubSet::of(12, {0}));
    CHECK(ideal_product(*z, i8.members, i8.members) == SubSet::of(12, {0, 4, 8}));
}

TEST_CASE("validate_ideal rejects non-ideals") {
    RingPtr z6 = make_cyclic_ring(6);
    CHECK_THROWS_AS(validate_ideal(Ideal{z6, SubSet::of(6, {0, 1})}), error);
    CHECK_FALSE(is_ideal_subset(*z6, SubSet::of(6, {3}))); // missing zero
}

TEST_CASE("is_2primal_ideal in Z12") {
    RingPtr z = make_cyclic_ring(12);
    // Z12/{0,4,8} = Z4 is 2-primal; Z12/{0,6} = Z6 is 2-primal
    CHECK(is_2primal_ideal(z, Ideal{z, SubSet::of(12, {0, 4, 8})}));
    CHECK(is_2primal_ideal(z, Ideal{z, SubSet::of(12, {0, 6})}));
}

TEST_CASE("left ideals of U2(F2) include one-sided examples") {
    RingPtr u = make_matrix_ring(2, 2, true);
    std::vector<SubSet> left = enumerate_left_ideals(u);
    std::vector<Ideal> two_sided = enumerate_ideals(u);
    CHECK(left.size() > two_sided.size());
    for (const Ideal& i : two_sided)
        CHECK(std::find(left.begin(), left.end(), i.members) != left.end());
}
