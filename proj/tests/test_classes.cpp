#include <doctest.h>

#include "finalg/classes.hpp"
#include "finalg/primal.hpp"

using namespace finalg;

namespace {

// Re-verify a witness against the raw tables, independently of the checker.
bool breaks_lz(const Submodule& n, const ClassWitness& w) {
    const Module& m = *n.module;
    if (!n.members.test(m.act(w.a, w.m))) return false; // hypothesis must hold
    for (int r = 0; r < m.ring->order; ++r) {
        int rm = m.act(r, w.m);
        for (int x = 0; x < m.order; ++x)
            if (m.act(w.a, x) == rm && !n.members.test(rm)) return true;
    }
    return false;
}

bool breaks_ifp(const Submodule& n, const ClassWitness& w) {
    const Module& m = *n.module;
    if (!n.members.test(m.act(w.a, w.m))) return false;
    for (int r = 0; r < m.ring->order; ++r)
        if (!n.members.test(m.act(w.a, m.act(r, w.m)))) return true;
    return false;
}

} // namespace

TEST_CASE("commutative modules carry every class flag at every submodule") {
    for (int nring : {4, 6, 12}) {
        ModulePtr m = regular_module(make_cyclic_ring(nring));
        for (const Submodule& n : enumerate_submodules(m)) {
            CHECK(is_symmetric_submodule(n));
            CHECK(is_ifp_submodule(n));
            CHECK(is_semi_symmetric_submodule(n));
        }
    }
}

TEST_CASE("zero submodule of regular Z4 is not Lee-Zhou completely semiprime") {
    ModulePtr m = regular_module(make_cyclic_ring(4));
    Submodule zero{m, SubSet::single(4, 0)};
    ClassWitness w;
    CHECK_FALSE(is_lz_completely_semiprime(zero, &w));
    CHECK(breaks_lz(zero, w)); // e.g. a = m = 2: 2*2 = 0 but 2 in R2 ∩ 2M
}

TEST_CASE("zero submodule of regular Z6 is Lee-Zhou completely semiprime") {
    ModulePtr m = regular_module(make_cyclic_ring(6));
    Submodule zero{m, SubSet::single(6, 0)};
    CHECK(is_lz_completely_semiprime(zero));
}

TEST_CASE("column module zero submodule fails every class") {
    ModulePtr col = column_module(make_matrix_ring(2, 2, false), 2, 2);
    Submodule zero{col, SubSet::single(4, 0)};
    ClassVector v = classify(zero);
    CHECK_FALSE(v.lz_cs);
    CHECK_FALSE(v.symmetric);
    CHECK_FALSE(v.ifp);
    CHECK_FALSE(v.semi_symmetric);
    CHECK_FALSE(v.two_primal);
    REQUIRE(v.ifp_w.has_value());
    CHECK(breaks_ifp(zero, *v.ifp_w));
}

TEST_CASE("classify asserts the implication chain on varied instances") {
    std::vector<ModulePtr> sample = {
        regular_module(make_cyclic_ring(8)),
        regular_module(make_matrix_ring(2, 2, true)),
        column_module(make_matrix_ring(2, 2, false), 2, 2),
        free_module(make_cyclic_ring(4), 2),
    };
    for (const ModulePtr& m : sample)
        for (const Submodule& n : enumerate_submodules(m)) {
            if (n.members.is_full()) continue;
            ClassVector v = classify(n); // throws internal if the chain breaks
            if (v.lz_cs) CHECK(v.symmetric);
            if (v.symmetric) CHECK(v.ifp);
            if (v.ifp) CHECK(v.semi_symmetric);
            if (v.semi_symmetric) CHECK(v.two_primal);
            if (v.lz_cs) CHECK(v.cs_def12);
            // the two complete-semiprimality readings agree both ways here
            CHECK(v.cs_def12 == is_completely_semiprime_submodule(n));
        }
}

TEST_CASE("reduced-module characterizations agree and match known cases") {
    struct Case {
        ModulePtr m;
        bool reduced;
    };
    std::vector<Case> cases = {
        {regular_module(make_cyclic_ring(6)), true},   // squarefree
        {regular_module(make_cyclic_ring(4)), false},  // 2^2 = 0
        {regular_module(make_cyclic_ring(30)), true},
        {free_module(make_cyclic_ring(2), 2), true},
        {regular_module(make_matrix_ring(2, 2, true)), false}, // E12^2 = 0
        {column_module(make_matrix_ring(2, 2, false), 2, 2), false},
    };
    for (const Case& c : cases) {
        CHECK(reduced_lz(c.m) == c.reduced);
        CHECK(reduced_square_kills_orbit(c.m) == c.reduced);
        CHECK(reduced_split(c.m) == c.reduced);
    }
}
