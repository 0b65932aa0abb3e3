#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/analysis.hpp"

namespace finalg {

struct CorpusSpec {
    int cyclic_max = 12;
    int ring_order_max = 16;
    int module_order_max = 256;
    int free_rank_max = 2;
    bool include_matrix = true;
    bool include_quotients = true;
};

/// Deterministic instance stream: catalog rings (cyclic, matrix/triangular
/// over F2/F3, non-coprime cyclic products, quotients by each ideal), per
/// ring the regular module, free modules, column modules, quotients by each
/// enumerated submodule and idempotent images of the regular module.
/// Duplicates by table identity are removed; output sorted by instance id.
std::vector<Instance> generate_corpus(const CorpusSpec& spec);

enum class HuntTargetId { Q1, Q2, RF_NOT_2PRIMAL, INCLUSION3_FAIL };

const char* hunt_target_name(HuntTargetId t);
std::optional<HuntTargetId> hunt_target_from_name(const std::string& s);
std::string hunt_target_description(HuntTargetId t);

struct Hit {
    std::string instance_id;
    std::string recipe;  // self-contained reproduction description
    std::string witness;
};

struct Findings {
    HuntTargetId target;
    std::vector<Hit> hits;
    int examined = 0;
    int budget = 0;
};

/// Evaluates the target predicate on the instance; nullopt when no hit.
/// Pure; used both by hunt() and by hit re-verification.
std::optional<Hit> evaluate_target(HuntTargetId t, const Instance& inst);

/// budget < 0 means the whole stream. Result is identical for any jobs >= 1.
Findings hunt(HuntTargetId t, const CorpusSpec& spec, int budget = -1, int jobs = 1);

} // namespace finalg
