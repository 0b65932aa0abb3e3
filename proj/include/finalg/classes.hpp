#pragma once

#include <optional>
#include <string>

#include "finalg/module.hpp"

namespace finalg {

/// Witness for a false class flag: elements that break the defining
/// implication, by table arithmetic.
struct ClassWitness {
    int a = -1, b = -1, m = -1;
    std::string str() const;
};

struct ClassVector {
    bool lz_cs = false;
    bool symmetric = false;
    bool ifp = false;
    bool semi_symmetric = false;
    bool two_primal = false;
    bool cs_def12 = false;
    std::optional<ClassWitness> lz_cs_w, symmetric_w, ifp_w, semi_symmetric_w, cs_def12_w;
};

// Chart-1 submodule classes. The submodule forms replace "= 0" by membership
// in N ("∈ N" / "⊆ N"):
//   Lee-Zhou CS:    am ∈ N  =>  Rm ∩ aM ⊆ N
//   symmetric:      abm ∈ N =>  bam ∈ N
//   IFP:            am ∈ N  =>  aRm ⊆ N
//   semi-symmetric: a²m ∈ N =>  (a)²m ⊆ N
bool is_lz_completely_semiprime(const Submodule& n, ClassWitness* w = nullptr);
bool is_symmetric_submodule(const Submodule& n, ClassWitness* w = nullptr);
bool is_ifp_submodule(const Submodule& n, ClassWitness* w = nullptr);
bool is_semi_symmetric_submodule(const Submodule& n, ClassWitness* w = nullptr);

/// All flags plus 2-primality and Def-1.2 complete semiprimality; asserts
/// the Chart-1 implication chain before returning.
ClassVector classify(const Submodule& n);

// The three reduced-module characterizations at the zero submodule,
// implemented independently (disagreement is a suite failure):
//   (a) am=0 => Rm ∩ aM = 0
//   (b) a²m=0 => aRm = 0
//   (c) (am=0 => aRm=0) and (a²m=0 => am=0)
bool reduced_lz(const ModulePtr& m);
bool reduced_square_kills_orbit(const ModulePtr& m);
bool reduced_split(const ModulePtr& m);

} // namespace finalg
