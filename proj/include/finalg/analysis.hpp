#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/classes.hpp"
#include "finalg/primal.hpp"

namespace finalg {

/// A bound (ring, module) pair with provenance: the unit of claim checking
/// and hunting. The recipe is a self-contained reproduction description.
struct Instance {
    RingPtr ring;
    ModulePtr module;
    std::string id;
    std::string recipe;
    bool tag_free = false;
    bool tag_projective = false; // free or idempotent-image witness
};

/// Memoized per-instance computations. Everything is derived lazily from the
/// tables; a size-limit error from enumeration propagates to the caller.
class Analysis {
public:
    explicit Analysis(Instance inst);

    const Instance& inst() const { return inst_; }
    const Ring& R() const { return *inst_.ring; }
    const Module& M() const { return *inst_.module; }

    const kernel::PrimeContext& ctx();
    const std::vector<Ideal>& ideals() { return ctx().ideals; }
    const std::vector<Submodule>& submodules() { return ctx().submodules; }
    int submodule_count() { return int(submodules().size()); }
    /// index into submodules() of the set; -1 when absent (then it is not a submodule)
    int submodule_index(const SubSet& members);
    int zero_index();
    int full_index();

    bool prime(int i);
    bool cprime(int i);
    bool semiprime(int i);     // true at the full (improper) submodule
    bool csemiprime(int i);    // true at the full (improper) submodule
    bool lz(int i);
    bool symmetric(int i);
    bool ifp(int i);
    bool ssym(int i);

    const SubSet& beta(int i);
    const SubSet& beta_co(int i);
    const SubSet& env_raw(int i);
    const SubSet& env_gen(int i);
    bool rf(int i);
    int rf_separator(int i); // -1 when rf holds

    /// Memoized analysis of M / submodules()[i], with the projection.
    Analysis& quotient(int i);
    const ModuleHom& quotient_proj(int i);
    bool two_primal(int i);
    bool two_primal_module() { return two_primal(zero_index()); }
    bool module_rf(); // rf at every submodule

    SubSet beta_R();
    SubSet betaco_R();
    SubSet sqrt0_R();
    bool ring_2primal();
    bool semisimple();
    bool commutative() const { return R().commutative; }

private:
    Instance inst_;
    std::optional<kernel::PrimeContext> ctx_;
    std::vector<signed char> prime_, cprime_, semiprime_, csemiprime_;
    std::vector<signed char> lz_, sym_, ifp_, ssym_, two_primal_;
    std::vector<std::optional<SubSet>> beta_, betaco_, raw_, gen_;
    std::map<int, std::pair<std::unique_ptr<Analysis>, ModuleHom>> quotients_;
    std::optional<SubSet> beta_r_, betaco_r_, sqrt0_r_;
    std::optional<bool> semisimple_;

    void ensure_flags_size();
};

} // namespace finalg
