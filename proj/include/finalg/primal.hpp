#pragma once

#include <vector>

#include "finalg/module.hpp"

namespace finalg {

struct EnvelopeWitness {
    int member; // raw envelope element
    int r, m, k; // r^k m in N and member = r m
};

struct EnvelopeResult {
    SubSet raw;
    Submodule generated;
    std::vector<EnvelopeWitness> witnesses; // one per raw member
};

/// Definitional test (quantifies over all ideals x all submodules) together
/// with the elementwise fast test over pairs (a, m) through <a> and <m>;
/// disagreement is an internal error.
bool is_prime_submodule(const Submodule& p);
bool is_completely_prime_submodule(const Submodule& p);
bool is_semiprime_submodule(const Submodule& p);
bool is_completely_semiprime_submodule(const Submodule& p);

Submodule prime_radical(const Submodule& n);
Submodule completely_prime_radical(const Submodule& n);

/// E_M(N) = {rm : r^k m in N for some k in [1, |R|]}, with witnesses, plus
/// the submodule it generates. The k-bound is sound because the power
/// sequence of r repeats within |R| steps.
EnvelopeResult envelope(const Submodule& n);

struct RfResult {
    bool holds;
    int separating = -1; // element in exactly one of <E(N)>, beta(N)
};
RfResult satisfies_radical_formula(const Submodule& n);
bool module_satisfies_rf(const ModulePtr& m);

bool is_2primal_submodule(const Submodule& n);
bool is_2primal_module(const ModulePtr& m);

// Raw predicate kernels over (module, member set). These assume the set is a
// valid submodule; the Submodule-taking wrappers above validate first.
// Primality kernels receive the instance-level enumerations so callers can
// amortize them.
namespace kernel {

bool completely_prime(const Module& m, const SubSet& p);
bool semiprime(const Module& m, const SubSet& p);
bool completely_semiprime(const Module& m, const SubSet& p);

struct PrimeContext {
    std::vector<Ideal> ideals;
    std::vector<Submodule> submodules;
    // products[i][j] = ideals[i] * submodules[j]
    std::vector<std::vector<SubSet>> products;
    // cyclic submodule <m> per element, <a><m> per pair, <a>M per a
    std::vector<SubSet> cyclic;
    std::vector<std::vector<SubSet>> principal_products;
    std::vector<SubSet> principal_full;

    static PrimeContext build(const ModulePtr& m);
    static PrimeContext build(const ModulePtr& m, std::vector<Ideal> ideals,
                              std::vector<Submodule> submodules);
};

/// Definitional + fast tests, asserted equal.
bool prime(const Module& m, const SubSet& p, const PrimeContext& ctx);

SubSet envelope_raw(const Module& m, const SubSet& n);
SubSet radical(const Module& m, const SubSet& n, const PrimeContext& ctx, bool completely);

} // namespace kernel

} // namespace finalg
