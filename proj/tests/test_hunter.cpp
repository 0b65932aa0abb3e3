#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "finalg/config.hpp"
#include "finalg/hunter.hpp"

using namespace finalg;

namespace {

CorpusSpec small_spec() {
    CorpusSpec s;
    s.cyclic_max = 6;
    s.ring_order_max = 16;
    s.module_order_max = 36;
    s.free_rank_max = 2;
    return s;
}

} // namespace

TEST_CASE("corpus generation is deterministic and sorted by id") {
    std::vector<Instance> a = generate_corpus(small_spec());
    std::vector<Instance> b = generate_corpus(small_spec());
    REQUIRE(a.size() == b.size());
    CHECK(a.size() > 10);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].recipe == b[i].recipe);
        CHECK(a[i].tag_free == b[i].tag_free);
    }
    CHECK(std::is_sorted(a.begin(), a.end(),
                         [](const Instance& x, const Instance& y) { return x.id < y.id; }));
}

TEST_CASE("corpus has no duplicate instances by table identity") {
    std::vector<Instance> corpus = generate_corpus(small_spec());
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            CHECK(corpus[i].id != corpus[j].id);
            if (corpus[i].ring->table_equal(*corpus[j].ring))
                CHECK_FALSE(corpus[i].module->table_equal(*corpus[j].module));
        }
}

TEST_CASE("corpus contains the canonical fixtures") {
    std::set<std::string> ids;
    for (const Instance& i : generate_corpus({})) ids.insert(i.id);
    CHECK(ids.count("Z4|reg(Z4)"));
    CHECK(ids.count("M2(F2)|col(F2^2)"));
    CHECK(ids.count("U2(F2)|reg(U2(F2))"));
    CHECK(ids.count("Z2|free(Z2,2)"));
    CHECK(ids.count("Z2xZ4|reg(Z2xZ4)"));
}

TEST_CASE("recipes reproduce their instances") {
    std::vector<Instance> corpus = generate_corpus(small_spec());
    int rebuilt = 0;
    for (const Instance& i : corpus) {
        json r = json::parse(i.recipe);
        RingPtr ring = ring_from_config(r.at("ring"));
        ModulePtr mod = module_from_config(ring, r.at("module"));
        CHECK(ring->table_equal(*i.ring));
        CHECK(mod->table_equal(*i.module));
        ++rebuilt;
    }
    CHECK(rebuilt == int(corpus.size()));
}

TEST_CASE("free and projective tags are set where expected") {
    for (const Instance& i : generate_corpus(small_spec())) {
        if (i.tag_free) CHECK(i.tag_projective);
        if (i.module->label == "reg(" + i.ring->label + ")") CHECK(i.tag_free);
        if (i.id.find("|im(") != std::string::npos) {
            CHECK(i.tag_projective);
            CHECK_FALSE(i.tag_free);
        }
    }
}

TEST_CASE("hunt target names round-trip") {
    for (HuntTargetId t : {HuntTargetId::Q1, HuntTargetId::Q2, HuntTargetId::RF_NOT_2PRIMAL,
                           HuntTargetId::INCLUSION3_FAIL}) {
        auto back = hunt_target_from_name(hunt_target_name(t));
        REQUIRE(back.has_value());
        CHECK(*back == t);
        CHECK_FALSE(hunt_target_description(t).empty());
    }
    CHECK_FALSE(hunt_target_from_name("bogus").has_value());
}

TEST_CASE("every hit re-verifies through evaluate_target") {
    for (HuntTargetId t : {HuntTargetId::Q1, HuntTargetId::Q2, HuntTargetId::RF_NOT_2PRIMAL,
                           HuntTargetId::INCLUSION3_FAIL}) {
        Findings f = hunt(t, small_spec());
        for (const Hit& h : f.hits) {
            json r = json::parse(h.recipe);
            Instance inst;
            inst.ring = ring_from_config(r.at("ring"));
            inst.module = module_from_config(inst.ring, r.at("module"));
            inst.id = h.instance_id;
            inst.recipe = h.recipe;
            auto again = evaluate_target(t, inst);
            REQUIRE(again.has_value());
            CHECK(again->witness == h.witness);
        }
    }
}

TEST_CASE("budget truncates the stream") {
    Findings f = hunt(HuntTargetId::Q1, small_spec(), 5);
    CHECK(f.examined == 5);
    CHECK(f.budget == 5);
}

TEST_CASE("parallel hunt equals sequential hunt") {
    for (HuntTargetId t : {HuntTargetId::Q2, HuntTargetId::RF_NOT_2PRIMAL}) {
        Findings seq = hunt(t, small_spec(), -1, 1);
        Findings par = hunt(t, small_spec(), -1, 4);
        CHECK(seq.examined == par.examined);
        REQUIRE(seq.hits.size() == par.hits.size());
        for (std::size_t i = 0; i < seq.hits.size(); ++i) {
            CHECK(seq.hits[i].instance_id == par.hits[i].instance_id);
            CHECK(seq.hits[i].witness == par.hits[i].witness);
        }
    }
}

TEST_CASE("known positives are found: RF_NOT_2PRIMAL is empty but Q-targets run") {
    // the column module fails RF and is not 2-primal, so it can never be a
    // RF_NOT_2PRIMAL hit; assert the evaluator agrees
    RingPtr m2 = make_matrix_ring(2, 2, false);
    Instance col;
    col.ring = m2;
    col.module = column_module(m2, 2, 2);
    col.id = "M2(F2)|col(F2^2)";
    col.recipe = "{}";
    CHECK_FALSE(evaluate_target(HuntTargetId::RF_NOT_2PRIMAL, col).has_value());
    // but it is NOT a Q1 hit either: E(0) generates the whole module
    CHECK_FALSE(evaluate_target(HuntTargetId::Q1, col).has_value());
}
