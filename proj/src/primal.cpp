#include "finalg/primal.hpp"

#include "finalg/error.hpp"

namespace finalg {

namespace kernel {

bool completely_prime(const Module& m, const SubSet& p) {
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a) {
        // aM ⊆ P?
        bool aM_in = true;
        for (int x = 0; x < m.order && aM_in; ++x) aM_in = p.test(m.act(a, x));
        if (aM_in) continue;
        for (int x = 0; x < m.order; ++x)
            if (p.test(m.act(a, x)) && !p.test(x)) return false;
    }
    return true;
}

bool semiprime(const Module& m, const SubSet& p) {
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a)
        for (int x = 0; x < m.order; ++x) {
            int ax = m.act(a, x);
            if (p.test(ax)) continue;
            bool aRax_in = true;
            for (int t = 0; t < r.order && aRax_in; ++t)
                aRax_in = p.test(m.act(a, m.act(t, ax)));
            if (aRax_in) return false;
        }
    return true;
}

bool completely_semiprime(const Module& m, const SubSet& p) {
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a) {
        int a2 = r.mul(a, a);
        for (int x = 0; x < m.order; ++x)
            if (p.test(m.act(a2, x)) && !p.test(m.act(a, x))) return false;
    }
    return true;
}

PrimeContext PrimeContext::build(const ModulePtr& m, std::vector<Ideal> ideals,
                                 std::vector<Submodule> submodules) {
    PrimeContext ctx;
    ctx.ideals = std::move(ideals);
    ctx.submodules = std::move(submodules);
    ctx.products.resize(ctx.ideals.size());
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
        ctx.products[i].reserve(ctx.submodules.size());
        for (const Submodule& n : ctx.submodules)
            ctx.products[i].push_back(ideal_submodule_product(ctx.ideals[i], n).members);
    }
    const Ring& r = *m->ring;
    ctx.cyclic.reserve(m->order);
    for (int x = 0; x < m->order; ++x)
        ctx.cyclic.push_back(submodule_generated(m, SubSet::single(m->order, x)).members);
    Submodule full{m, SubSet(m->order, true)};
    ctx.principal_products.resize(r.order);
    ctx.principal_full.reserve(r.order);
    for (int a = 0; a < r.order; ++a) {
        Ideal pa = ideal_generated(m->ring, SubSet::single(r.order, a));
        ctx.principal_full.push_back(ideal_submodule_product(pa, full).members);
        ctx.principal_products[a].reserve(m->order);
        for (int x = 0; x < m->order; ++x)
            ctx.principal_products[a].push_back(
                ideal_submodule_product(pa, Submodule{m, ctx.cyclic[x]}).members);
    }
    return ctx;
}

PrimeContext PrimeContext::build(const ModulePtr& m) {
    return build(m, enumerate_ideals(m->ring), enumerate_submodules(m));
}

bool prime(const Module& m, const SubSet& p, const PrimeContext& ctx) {
    bool definitional = true;
    for (std::size_t i = 0; i < ctx.ideals.size() && definitional; ++i) {
        // A M ⊆ P disposes of every N at once
        if (p.contains(ctx.products[i].back())) continue;
        for (std::size_t j = 0; j < ctx.submodules.size(); ++j)
            if (p.contains(ctx.products[i][j]) && !p.contains(ctx.submodules[j].members)) {
                definitional = false;
                break;
            }
    }
    bool fast = true;
    for (int a = 0; a < m.ring->order && fast; ++a) {
        if (p.contains(ctx.principal_full[a])) continue;
        for (int x = 0; x < m.order; ++x)
            if (p.contains(ctx.principal_products[a][x]) && !p.contains(ctx.cyclic[x])) {
                fast = false;
                break;
            }
    }
    if (definitional != fast)
        throw error(errc::internal, "prime submodule tests disagree on " + p.str() +
                                        " in " + m.label);
    return definitional;
}

SubSet envelope_raw(const Module& m, const SubSet& n) {
    const Ring& r = *m.ring;
    SubSet raw(m.order);
    for (int a = 0; a < r.order; ++a) {
        // distinct powers of a; the sequence repeats within |R| steps
        std::vector<int> powers;
        {
            SubSet seen(r.order);
            int p = a;
            for (int k = 1; k <= r.order; ++k) {
                if (seen.test(p)) break;
                seen.set(p);
                powers.push_back(p);
                p = r.mul(p, a);
            }
        }
        for (int x = 0; x < m.order; ++x) {
            for (int p : powers)
                if (n.test(m.act(p, x))) {
                    raw.set(m.act(a, x));
                    break;
                }
        }
    }
    return raw;
}

SubSet radical(const Module& m, const SubSet& n, const PrimeContext& ctx, bool completely) {
    SubSet acc(m.order, true);
    bool any = false;
    for (const Submodule& p : ctx.submodules) {
        if (p.members.is_full()) continue;
        if (!p.members.contains(n)) continue;
        bool is_p = completely ? completely_prime(m, p.members) : prime(m, p.members, ctx);
        if (is_p) {
            acc &= p.members;
            any = true;
        }
    }
    if (!any) return SubSet(m.order, true);
    return acc;
}

} // namespace kernel

namespace {

void require_proper(const Submodule& p) {
    validate_submodule(p);
    // left unital module: RM = M, so "RM not contained in P" is properness
    if (p.members.is_full())
        throw error(errc::invalid_parameter, "improper-submodule: " + p.module->label);
}

} // namespace

bool is_prime_submodule(const Submodule& p) {
    require_proper(p);
    auto ctx = kernel::PrimeContext::build(p.module);
    return kernel::prime(*p.module, p.members, ctx);
}

bool is_completely_prime_submodule(const Submodule& p) {
    require_proper(p);
    return kernel::completely_prime(*p.module, p.members);
}

bool is_semiprime_submodule(const Submodule& p) {
    require_proper(p);
    return kernel::semiprime(*p.module, p.members);
}

bool is_completely_semiprime_submodule(const Submodule& p) {
    require_proper(p);
    return kernel::completely_semiprime(*p.module, p.members);
}

Submodule prime_radical(const Submodule& n) {
    validate_submodule(n);
    auto ctx = kernel::PrimeContext::build(n.module);
    return Submodule{n.module, kernel::radical(*n.module, n.members, ctx, false)};
}

Submodule completely_prime_radical(const Submodule& n) {
    validate_submodule(n);
    auto ctx = kernel::PrimeContext::build(n.module);
    return Submodule{n.module, kernel::radical(*n.module, n.members, ctx, true)};
}

EnvelopeResult envelope(const Submodule& n) {
    validate_submodule(n);
    const Module& m = *n.module;
    const Ring& r = *m.ring;
    EnvelopeResult out;
    out.raw = SubSet(m.order);
    for (int a = 0; a < r.order; ++a)
        for (int x = 0; x < m.order; ++x) {
            int p = a;
            for (int k = 1; k <= r.order; ++k) {
                if (n.members.test(m.act(p, x))) {
                    int member = m.act(a, x);
                    if (!out.raw.test(member)) {
                        out.raw.set(member);
                        out.witnesses.push_back({member, a, x, k});
                    }
                    break;
                }
                p = r.mul(p, a);
            }
        }
    out.generated = submodule_generated(n.module, out.raw);
    return out;
}

RfResult satisfies_radical_formula(const Submodule& n) {
    validate_submodule(n);
    auto ctx = kernel::PrimeContext::build(n.module);
    SubSet gen = submodule_generated(n.module, kernel::envelope_raw(*n.module, n.members)).members;
    SubSet beta = kernel::radical(*n.module, n.members, ctx, false);
    RfResult res;
    res.holds = gen == beta;
    if (!res.holds) res.separating = gen.first_diff(beta);
    return res;
}

bool module_satisfies_rf(const ModulePtr& m) {
    auto ctx = kernel::PrimeContext::build(m);
    for (const Submodule& n : ctx.submodules) {
        SubSet gen = submodule_generated(m, kernel::envelope_raw(*m, n.members)).members;
        if (gen != kernel::radical(*m, n.members, ctx, false)) return false;
    }
    return true;
}

bool is_2primal_submodule(const Submodule& n) {
    auto [q, proj] = quotient_module(n.module, n);
    auto ctx = kernel::PrimeContext::build(q);
    SubSet z = SubSet::single(q->order, q->zero);
    return kernel::radical(*q, z, ctx, false) == kernel::radical(*q, z, ctx, true);
}

bool is_2primal_module(const ModulePtr& m) {
    auto ctx = kernel::PrimeContext::build(m);
    SubSet z = SubSet::single(m->order, m->zero);
    return kernel::radical(*m, z, ctx, false) == kernel::radical(*m, z, ctx, true);
}

} // namespace finalg
