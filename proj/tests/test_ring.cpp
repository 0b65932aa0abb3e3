#include <doctest.h>

#include <vector>

#include "finalg/error.hpp"
#include "finalg/ring.hpp"

using namespace finalg;

TEST_CASE("cyclic ring tables") {
    RingPtr z6 = make_cyclic_ring(6);
    CHECK(z6->order == 6);
    CHECK(z6->zero == 0);
    CHECK(z6->one == 1);
    CHECK(z6->commutative);
    CHECK(z6->label == "Z6");
    CHECK(z6->add(4, 5) == 3);
    CHECK(z6->mul(4, 5) == 2);
    CHECK(z6->neg(2) == 4);
    CHECK(z6->pow(2, 3) == 2); // 8 mod 6
}

TEST_CASE("the one-element ring is accepted (zero = one)") {
    RingPtr z1 = make_cyclic_ring(1);
    CHECK(z1->order == 1);
    CHECK(z1->zero == z1->one);
}

TEST_CASE("validate_ring rejects broken tables with a pointed message") {
    // Z2 addition with multiplication redefined so 1 is not a unit on 1*1
    std::vector<int> add{0, 1, 1, 0};
    SUBCASE("no unit") {
        std::vector<int> mul{0, 0, 0, 0};
        CHECK_THROWS_WITH_AS(validate_ring(2, add, mul, "bad"),
                             doctest::Contains("no-unit"), error);
    }
    SUBCASE("distributivity violated") {
        // Z3 addition with an idempotent monoid multiplication: 2*(1+1) != 2*1+2*1
        std::vector<int> add3{0, 1, 2, 1, 2, 0, 2, 0, 1};
        std::vector<int> mul3{0, 0, 0, 0, 1, 2, 0, 2, 2};
        CHECK_THROWS_WITH_AS(validate_ring(3, add3, mul3, "bad"),
                             doctest::Contains("distributivity"), error);
    }
    SUBCASE("table size mismatch") {
        CHECK_THROWS_AS(validate_ring(3, add, add, "bad"), error);
    }
    SUBCASE("entry out of range") {
        std::vector<int> mul{0, 0, 0, 7};
        CHECK_THROWS_AS(validate_ring(2, add, mul, "bad"), error);
    }
}

TEST_CASE("order bound enforced") {
    CHECK_THROWS_AS(make_cyclic_ring(limits().ring_order_max + 1), error);
    CHECK_THROWS_AS(make_cyclic_ring(0), error);
}

TEST_CASE("M2(F2): order 16, noncommutative, E12 squares to zero") {
    RingPtr m = make_matrix_ring(2, 2, false);
    CHECK(m->order == 16);
    CHECK_FALSE(m->commutative);
    CHECK(m->label == "M2(F2)");
    // codec: entries (r,c) row-major, first entry least significant.
    // E12 has a 1 in slot (0,1) -> index 2; E21 in slot (1,0) -> index 4.
    int e12 = 2, e21 = 4;
    CHECK(m->mul(e12, e12) == m->zero);
    CHECK(m->mul(e21, e21) == m->zero);
    CHECK(m->mul(e12, e21) != m->mul(e21, e12));
    // identity = slots (0,0) and (1,1) -> 1 + 8
    CHECK(m->one == 9);
}

TEST_CASE("U2(F2): upper triangular, order 8") {
    RingPtr u = make_matrix_ring(2, 2, true);
    CHECK(u->order == 8);
    CHECK_FALSE(u->commutative);
    CHECK(u->label == "U2(F2)");
    // slots (0,0),(0,1),(1,1); identity = 1 + 4
    CHECK(u->one == 5);
    int e12 = 2;
    CHECK(u->mul(e12, e12) == u->zero);
}

TEST_CASE("product ring componentwise arithmetic") {
    RingPtr p = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(4));
    CHECK(p->order == 8);
    CHECK(p->commutative);
    CHECK(p->label == "Z2xZ4");
    // index = x*4 + y
    CHECK(p->add(1 * 4 + 3, 1 * 4 + 2) == 0 * 4 + 1);
    CHECK(p->mul(1 * 4 + 3, 1 * 4 + 2) == 1 * 4 + 2);
    CHECK(p->one == 1 * 4 + 1);
}

TEST_CASE("quotient ring Z4 / {0,2} is the field with two elements") {
    RingPtr z4 = make_cyclic_ring(4);
    Ideal i{z4, SubSet::of(4, {0, 2})};
    auto [q, coset] = make_quotient_ring(z4, i);
    CHECK(q->order == 2);
    CHECK(q->table_equal(*make_cyclic_ring(2)));
    CHECK(coset[0] == coset[2]);
    CHECK(coset[1] == coset[3]);
    CHECK(coset[0] != coset[1]);
}

TEST_CASE("quotient by a non-ideal is rejected") {
    RingPtr z4 = make_cyclic_ring(4);
    Ideal bad{z4, SubSet::of(4, {0, 1})};
    CHECK_THROWS_AS(make_quotient_ring(z4, bad), error);
}

TEST_CASE("power sequences stabilize within ring order") {
    for (RingPtr r : {make_cyclic_ring(12), make_matrix_ring(2, 2, false),
                      make_matrix_ring(2, 2, true)}) {
        for (int x = 0; x < r->order; ++x) {
            SubSet upto(r->order), twice(r->order);
            for (int k = 1; k <= r->order; ++k) upto.set(r->pow(x, k));
            for (int k = 1; k <= 2 * r->order; ++k) twice.set(r->pow(x, k));
            CHECK(upto == twice);
        }
    }
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
}
