#include "finalg/analysis.hpp"

#include <algorithm>

#include "finalg/error.hpp"

namespace finalg {

Analysis::Analysis(Instance inst) : inst_(std::move(inst)) {}

const kernel::PrimeContext& Analysis::ctx() {
    if (!ctx_) ctx_ = kernel::PrimeContext::build(inst_.module);
    ensure_flags_size();
    return *ctx_;
}

void Analysis::ensure_flags_size() {
    std::size_t n = ctx_->submodules.size();
    if (prime_.size() == n) return;
    prime_.assign(n, -1);
    cprime_.assign(n, -1);
    semiprime_.assign(n, -1);
    csemiprime_.assign(n, -1);
    lz_.assign(n, -1);
    sym_.assign(n, -1);
    ifp_.assign(n, -1);
    ssym_.assign(n, -1);
    two_primal_.assign(n, -1);
    beta_.assign(n, std::nullopt);
    betaco_.assign(n, std::nullopt);
    raw_.assign(n, std::nullopt);
    gen_.assign(n, std::nullopt);
}

int Analysis::submodule_index(const SubSet& members) {
    const auto& subs = submodules();
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i].members == members) return int(i);
    return -1;
}

int Analysis::zero_index() {
    int i = submodule_index(SubSet::single(M().order, M().zero));
    if (i < 0) throw error(errc::internal, "zero submodule missing from enumeration");
    return i;
}

int Analysis::full_index() {
    int i = submodule_index(SubSet(M().order, true));
    if (i < 0) throw error(errc::internal, "full submodule missing from enumeration");
    return i;
}

bool Analysis::prime(int i) {
    ctx();
    if (prime_[i] < 0) {
        const SubSet& p = submodules()[i].members;
        prime_[i] = !p.is_full() && kernel::prime(M(), p, *ctx_) ? 1 : 0;
    }
    return prime_[i];
}

bool Analysis::cprime(int i) {
    ctx();
    if (cprime_[i] < 0) {
        const SubSet& p = submodules()[i].members;
        cprime_[i] = !p.is_full() && kernel::completely_prime(M(), p) ? 1 : 0;
    }
    return cprime_[i];
}

bool Analysis::semiprime(int i) {
    ctx();
    if (semiprime_[i] < 0) {
        const SubSet& p = submodules()[i].members;
        semiprime_[i] = p.is_full() || kernel::semiprime(M(), p) ? 1 : 0;
    }
    return semiprime_[i];
}

bool Analysis::csemiprime(int i) {
    ctx();
    if (csemiprime_[i] < 0) {
        const SubSet& p = submodules()[i].members;
        csemiprime_[i] = p.is_full() || kernel::completely_semiprime(M(), p) ? 1 : 0;
    }
    return csemiprime_[i];
}

bool Analysis::lz(int i) {
    ctx();
    if (lz_[i] < 0) lz_[i] = is_lz_completely_semiprime(submodules()[i]) ? 1 : 0;
    return lz_[i];
}

bool Analysis::symmetric(int i) {
    ctx();
    if (sym_[i] < 0) sym_[i] = is_symmetric_submodule(submodules()[i]) ? 1 : 0;
    return sym_[i];
}

bool Analysis::ifp(int i) {
    ctx();
    if (ifp_[i] < 0) ifp_[i] = is_ifp_submodule(submodules()[i]) ? 1 : 0;
    return ifp_[i];
}

bool Analysis::ssym(int i) {
    ctx();
    if (ssym_[i] < 0) ssym_[i] = is_semi_symmetric_submodule(submodules()[i]) ? 1 : 0;
    return ssym_[i];
}

const SubSet& Analysis::beta(int i) {
    ctx();
    if (!beta_[i]) {
        SubSet acc(M().order, true);
        bool any = false;
        for (int j = 0; j < submodule_count(); ++j) {
            const SubSet& p = submodules()[j].members;
            if (p.is_full() || !p.contains(submodules()[i].members)) continue;
            if (prime(j)) {
                acc &= p;
                any = true;
            }
        }
        beta_[i] = any ? acc : SubSet(M().order, true);
    }
    return *beta_[i];
}

const SubSet& Analysis::beta_co(int i) {
    ctx();
    if (!betaco_[i]) {
        SubSet acc(M().order, true);
        bool any = false;
        for (int j = 0; j < submodule_count(); ++j) {
            const SubSet& p = submodules()[j].members;
            if (p.is_full() || !p.contains(submodules()[i].members)) continue;
            if (cprime(j)) {
                acc &= p;
                any = true;
            }
        }
        betaco_[i] = any ? acc : SubSet(M().order, true);
    }
    return *betaco_[i];
}

const SubSet& Analysis::env_raw(int i) {
    ctx();
    if (!raw_[i]) raw_[i] = kernel::envelope_raw(M(), submodules()[i].members);
    return *raw_[i];
}

const SubSet& Analysis::env_gen(int i) {
    ctx();
    if (!gen_[i]) gen_[i] = submodule_generated(inst_.module, env_raw(i)).members;
    return *gen_[i];
}

bool Analysis::rf(int i) { return env_gen(i) == beta(i); }

int Analysis::rf_separator(int i) { return env_gen(i).first_diff(beta(i)); }

Analysis& Analysis::quotient(int i) {
    ctx();
    auto it = quotients_.find(i);
    if (it == quotients_.end()) {
        auto [qm, proj] = quotient_module(inst_.module, submodules()[i]);
        Instance qi;
        qi.ring = inst_.ring;
        qi.module = qm;
        qi.id = inst_.id + "/q" + submodules()[i].members.str();
        qi.recipe = inst_.recipe;
        it = quotients_
                 .emplace(i, std::make_pair(std::make_unique<Analysis>(std::move(qi)),
                                            std::move(proj)))
                 .first;
    }
    return *it->second.first;
}

const ModuleHom& Analysis::quotient_proj(int i) {
    quotient(i);
    return quotients_.at(i).second;
}

bool Analysis::two_primal(int i) {
    ctx();
    if (two_primal_[i] < 0) {
        Analysis& q = quotient(i);
        int z = q.zero_index();
        two_primal_[i] = q.beta(z) == q.beta_co(z) ? 1 : 0;
    }
    return two_primal_[i];
}

bool Analysis::module_rf() {
    for (int i = 0; i < submodule_count(); ++i)
        if (!rf(i)) return false;
    return true;
}

SubSet Analysis::beta_R() {
    if (!beta_r_) beta_r_ = ring_prime_radical(inst_.ring, ctx().ideals);
    return *beta_r_;
}

SubSet Analysis::betaco_R() {
    if (!betaco_r_) betaco_r_ = ring_completely_prime_radical(inst_.ring, ctx().ideals);
    return *betaco_r_;
}

SubSet Analysis::sqrt0_R() {
    if (!sqrt0_r_)
        sqrt0_r_ = sqrt_ideal(inst_.ring, SubSet::single(R().order, R().zero));
    return *sqrt0_r_;
}

bool Analysis::ring_2primal() { return sqrt0_R() == beta_R(); }

bool Analysis::semisimple() {
    if (!semisimple_) {
        Ideal j = jacobson_radical(inst_.ring);
        semisimple_ = j.members == SubSet::single(R().order, R().zero) ||
                      (R().order == 1 && j.members.is_full());
    }
    return *semisimple_;
}

} // namespace finalg
