#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "finalg/ideal.hpp"
#include "finalg/ring.hpp"

namespace finalg {

/// Finite left unital module over a Ring, by addition and action tables.
/// Immutable after validation.
struct Module {
    RingPtr ring;
    int order = 0;
    std::vector<int> add_table; // order*order
    std::vector<int> neg_table;
    std::vector<int> act_table; // ring->order x order
    int zero = 0;
    std::string label;

    int add(int x, int y) const { return add_table[x * order + y]; }
    int neg(int x) const { return neg_table[x]; }
    int act(int r, int m) const { return act_table[r * order + m]; }
    bool table_equal(const Module& o) const {
        return order == o.order && add_table == o.add_table && act_table == o.act_table &&
               ring->table_equal(*o.ring);
    }
};

using ModulePtr = std::shared_ptr<const Module>;

struct Submodule {
    ModulePtr module;
    SubSet members;
};

struct ModuleHom {
    ModulePtr source;
    ModulePtr target;
    std::vector<int> map; // source element -> target element
    bool surjective = false;

    int operator()(int x) const { return map[x]; }
};

ModulePtr validate_module(const RingPtr& r, int order, std::vector<int> add,
                          std::vector<int> act, std::string label);
void validate_submodule(const Submodule& n);
bool is_submodule_subset(const Module& m, const SubSet& s);
/// Checks additivity and action-equivariance, fills the surjectivity flag.
ModuleHom validate_hom(const ModulePtr& source, const ModulePtr& target,
                       std::vector<int> map);

ModulePtr regular_module(const RingPtr& r);
ModulePtr free_module(const RingPtr& r, int rank);
/// Column vectors of length k over F_p as a left module over M_k(F_p).
ModulePtr column_module(const RingPtr& matrix_ring, int p, int k);

std::pair<ModulePtr, ModuleHom> quotient_module(const ModulePtr& m, const Submodule& n);

struct IdempotentImage {
    ModulePtr module;
    ModuleHom inclusion; // image module -> ambient module
};
/// Image of an idempotent endomorphism, re-packaged as a standalone module
/// (a direct summand, hence projective).
IdempotentImage idempotent_image(const ModulePtr& m, const ModuleHom& e);

Submodule submodule_generated(const ModulePtr& m, const SubSet& s);
std::vector<Submodule> enumerate_submodules(const ModulePtr& m);

/// {r in R : r s ⊆ P for every s in S}; need not be a two-sided ideal.
SubSet colon(const Submodule& p, const SubSet& s);

Submodule ideal_submodule_product(const Ideal& a, const Submodule& n);

Submodule hom_image(const ModuleHom& h, const Submodule& n);
Submodule hom_preimage(const ModuleHom& h, const Submodule& nprime);

} // namespace finalg
