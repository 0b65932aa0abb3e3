#include "finalg/hunter.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "finalg/config.hpp"
#include "finalg/error.hpp"

namespace finalg {

namespace {

std::string ring_key(const Ring& r) {
    std::string k = std::to_string(r.order) + ":";
    for (int v : r.add_table) k += std::to_string(v) + ",";
    k += ";";
    for (int v : r.mul_table) k += std::to_string(v) + ",";
    return k;
}

std::string module_key(const std::string& rkey, const Module& m) {
    std::string k = rkey + "#" + std::to_string(m.order) + ":";
    for (int v : m.add_table) k += std::to_string(v) + ",";
    k += ";";
    for (int v : m.act_table) k += std::to_string(v) + ",";
    return k;
}

struct RingEntry {
    RingPtr r;
    json cfg;
    int matrix_p = 0, matrix_k = 0; // set for full matrix rings
};

std::vector<RingEntry> ring_catalog(const CorpusSpec& spec) {
    std::vector<RingEntry> out;
    std::map<std::string, bool> seen;
    auto insert = [&](RingPtr r, json cfg, int mp = 0, int mk = 0) {
        std::string k = ring_key(*r);
        if (seen.count(k)) return;
        seen[k] = true;
        out.push_back(RingEntry{std::move(r), std::move(cfg), mp, mk});
    };

    int cyc_max = std::min(spec.cyclic_max, spec.ring_order_max);
    for (int n = 1; n <= cyc_max; ++n)
        insert(make_cyclic_ring(n), json{{"kind", "cyclic"}, {"n", n}});

    if (spec.include_matrix) {
        for (int p : {2, 3})
            for (int k = 2; k <= 4; ++k) {
                long long full = 1, tri = 1;
                for (int i = 0; i < k * k; ++i) full *= p;
                for (int i = 0; i < k * (k + 1) / 2; ++i) tri *= p;
                if (tri <= spec.ring_order_max)
                    insert(make_matrix_ring(p, k, true),
                           json{{"kind", "triangular"}, {"p", p}, {"k", k}});
                if (full <= spec.ring_order_max)
                    insert(make_matrix_ring(p, k, false),
                           json{{"kind", "matrix"}, {"p", p}, {"k", k}}, p, k);
            }
    }

    // non-coprime cyclic products (coprime ones are cyclic again)
    for (int a = 2; a <= cyc_max; ++a)
        for (int b = a; b <= cyc_max; ++b) {
            if (std::gcd(a, b) == 1) continue;
            if ((long long)a * b > spec.ring_order_max) continue;
            insert(make_product_ring(make_cyclic_ring(a), make_cyclic_ring(b)),
                   json{{"kind", "product"},
                        {"a", json{{"kind", "cyclic"}, {"n", a}}},
                        {"b", json{{"kind", "cyclic"}, {"n", b}}}});
        }

    if (spec.include_quotients) {
        std::size_t base_count = out.size();
        for (std::size_t i = 0; i < base_count; ++i) {
            const RingEntry& e = out[i];
            if (e.r->order > limits().ring_lattice_max) continue;
            for (const Ideal& id : enumerate_ideals(e.r)) {
                if (id.members.count() <= 1 || id.members.is_full()) continue;
                auto [q, coset] = make_quotient_ring(e.r, id);
                insert(q, json{{"kind", "quotient"},
                               {"ring", e.cfg},
                               {"ideal_generators", id.members.elements()}});
            }
        }
    }
    return out;
}

} // namespace

std::vector<Instance> generate_corpus(const CorpusSpec& spec) {
    std::vector<Instance> out;
    std::map<std::string, std::size_t> seen; // module key -> index in out
    auto insert = [&](const RingEntry& re, ModulePtr m, const json& mcfg, std::string id,
                      bool free_tag, bool proj_tag) {
        std::string k = module_key(ring_key(*re.r), *m);
        auto it = seen.find(k);
        if (it != seen.end()) {
            out[it->second].tag_free = out[it->second].tag_free || free_tag;
            out[it->second].tag_projective = out[it->second].tag_projective || proj_tag;
            return;
        }
        Instance inst;
        inst.ring = re.r;
        inst.module = std::move(m);
        inst.id = std::move(id);
        inst.recipe = json{{"ring", re.cfg}, {"module", mcfg}}.dump();
        inst.tag_free = free_tag;
        inst.tag_projective = proj_tag;
        seen[k] = out.size();
        out.push_back(std::move(inst));
    };

    int mod_max = std::min(spec.module_order_max, limits().module_order_max);
    for (const RingEntry& re : ring_catalog(spec)) {
        const std::string& rl = re.r->label;
        std::vector<std::pair<ModulePtr, json>> bases;

        ModulePtr reg = regular_module(re.r);
        json reg_cfg{{"kind", "regular"}};
        // the regular module is free of rank 1
        insert(re, reg, reg_cfg, rl + "|" + reg->label, true, true);
        bases.emplace_back(reg, reg_cfg);

        for (int rank = 2; rank <= spec.free_rank_max; ++rank) {
            long long order = 1;
            bool fits = true;
            for (int i = 0; i < rank; ++i) {
                order *= re.r->order;
                if (order > mod_max) { fits = false; break; }
            }
            if (!fits) continue;
            ModulePtr fm = free_module(re.r, rank);
            json fcfg{{"kind", "free"}, {"rank", rank}};
            insert(re, fm, fcfg, rl + "|" + fm->label, true, true);
            bases.emplace_back(fm, fcfg);
        }

        if (re.matrix_p > 0) {
            long long order = 1;
            for (int i = 0; i < re.matrix_k; ++i) order *= re.matrix_p;
            if (order <= mod_max) {
                ModulePtr cm = column_module(re.r, re.matrix_p, re.matrix_k);
                insert(re, cm,
                       json{{"kind", "column"}, {"p", re.matrix_p}, {"k", re.matrix_k}},
                       rl + "|" + cm->label, false, false);
            }
        }

        // projective non-free summands: images of right multiplication by an
        // idempotent on the regular module
        for (int e = 0; e < re.r->order; ++e) {
            if (re.r->mul(e, e) != e || e == re.r->zero || e == re.r->one) continue;
            std::vector<int> map(re.r->order);
            for (int x = 0; x < re.r->order; ++x) map[x] = re.r->mul(x, e);
            ModuleHom h = validate_hom(reg, reg, std::move(map));
            IdempotentImage img = idempotent_image(reg, h);
            insert(re, img.module, module_tables_config(*img.module),
                   rl + "|im(e=" + std::to_string(e) + ")", false, true);
        }

        if (spec.include_quotients) {
            for (const auto& [base, bcfg] : bases) {
                if (base->order > limits().module_lattice_max) continue;
                for (const Submodule& n : enumerate_submodules(base)) {
                    if (n.members.count() <= 1) continue; // quotient by {0} is the base
                    auto [qm, proj] = quotient_module(base, n);
                    insert(re, qm,
                           json{{"kind", "quotient"},
                                {"module", bcfg},
                                {"generators", n.members.elements()}},
                           rl + "|" + qm->label, false, false);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Instance& a, const Instance& b) { return a.id < b.id; });
    return out;
}

const char* hunt_target_name(HuntTargetId t) {
    switch (t) {
    case HuntTargetId::Q1: return "Q1";
    case HuntTargetId::Q2: return "Q2";
    case HuntTargetId::RF_NOT_2PRIMAL: return "RF_NOT_2PRIMAL";
    case HuntTargetId::INCLUSION3_FAIL: return "INCLUSION3_FAIL";
    }
    return "?";
}

std::optional<HuntTargetId> hunt_target_from_name(const std::string& s) {
    for (HuntTargetId t : {HuntTargetId::Q1, HuntTargetId::Q2, HuntTargetId::RF_NOT_2PRIMAL,
                           HuntTargetId::INCLUSION3_FAIL})
        if (s == hunt_target_name(t)) return t;
    return std::nullopt;
}

std::string hunt_target_description(HuntTargetId t) {
    switch (t) {
    case HuntTargetId::Q1:
        return "prime module, not completely prime, with E_M(0) = 0";
    case HuntTargetId::Q2:
        return "completely semiprime module, not completely prime, with beta(M) = 0";
    case HuntTargetId::RF_NOT_2PRIMAL:
        return "zero submodule satisfies the radical formula but the module is not 2-primal";
    case HuntTargetId::INCLUSION3_FAIL:
        return "beta_co(M) not contained in <E_M(0)>";
    }
    return "";
}

std::optional<Hit> evaluate_target(HuntTargetId t, const Instance& inst) {
    Analysis a(inst);
    if (inst.module->order <= 1) return std::nullopt; // zero submodule is improper
    int z = a.zero_index();
    SubSet zero = SubSet::single(a.M().order, a.M().zero);
    bool hit = false;
    std::string w;
    switch (t) {
    case HuntTargetId::Q1:
        hit = a.prime(z) && !a.cprime(z) && a.env_raw(z) == zero;
        if (hit) w = "prime=1;cprime=0;env0=" + a.env_raw(z).str();
        break;
    case HuntTargetId::Q2:
        hit = a.csemiprime(z) && !a.cprime(z) && a.beta(z) == zero;
        if (hit) w = "cs=1;cprime=0;beta0=" + a.beta(z).str();
        break;
    case HuntTargetId::RF_NOT_2PRIMAL:
        hit = a.rf(z) && !a.two_primal_module();
        if (hit)
            w = "envgen=" + a.env_gen(z).str() + ";beta=" + a.beta(z).str() +
                ";betaco=" + a.beta_co(z).str();
        break;
    case HuntTargetId::INCLUSION3_FAIL:
        hit = !a.env_gen(z).contains(a.beta_co(z));
        if (hit) w = "betaco=" + a.beta_co(z).str() + ";envgen=" + a.env_gen(z).str();
        break;
    }
    if (!hit) return std::nullopt;
    return Hit{inst.id, inst.recipe, w};
}

Findings hunt(HuntTargetId t, const CorpusSpec& spec, int budget, int jobs) {
    std::vector<Instance> corpus = generate_corpus(spec);
    if (budget >= 0 && int(corpus.size()) > budget) corpus.resize(budget);
    std::vector<std::optional<Hit>> slots(corpus.size());

    if (jobs <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            slots[i] = evaluate_target(t, corpus[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= corpus.size()) break;
                slots[i] = evaluate_target(t, corpus[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    Findings f;
    f.target = t;
    f.examined = int(corpus.size());
    f.budget = budget >= 0 ? budget : int(corpus.size());
    for (auto& s : slots)
        if (s) f.hits.push_back(std::move(*s));
    return f;
}

} // namespace finalg
