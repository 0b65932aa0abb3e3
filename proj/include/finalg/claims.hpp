#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "finalg/analysis.hpp"

namespace finalg {

enum class ClaimMode { implication, equality, existence };

/// One quantified case of a claim on one instance.
struct CaseOutcome {
    bool hyp = false;
    bool concl = false;
    std::string witness; // filled for failing cases
};

struct Claim {
    std::string id;
    std::string description;
    ClaimMode mode = ClaimMode::implication;
    std::function<std::vector<CaseOutcome>(Analysis&)> cases;
};

enum class Verdict { holds, vacuous, failed, skipped };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::vacuous: return "vacuous";
    case Verdict::failed: return "FAILED";
    case Verdict::skipped: return "skipped";
    }
    return "?";
}

struct ClaimResult {
    std::string claim_id;
    std::string instance_id;
    Verdict verdict = Verdict::vacuous;
    std::string witness;
    long long micros = 0;
};

struct ClaimTally {
    int holds = 0, vacuous = 0, failed = 0, skipped = 0;
};

struct SuiteReport {
    std::string corpus_desc;
    std::vector<std::string> claim_ids;
    std::map<std::string, ClaimTally> tallies;
    std::vector<ClaimResult> results;  // all, in deterministic order
    std::vector<ClaimResult> failures; // FAILED only
    int instances = 0;
    long long wall_ms = 0;

    bool clean() const { return failures.empty(); }
    /// claims with zero non-vacuous evaluations (corpus gap)
    std::vector<std::string> fully_vacuous() const;
};

/// The stable registry, sorted by claim id.
const std::vector<Claim>& claim_registry();

/// corrupt_claim, when nonempty, negates that claim's conclusions; used by
/// the failure-path tests.
ClaimResult check_claim(const Claim& c, Analysis& a, bool corrupt = false);

SuiteReport run_suite(std::vector<Instance> corpus, const std::set<std::string>& filter = {},
                      const std::string& corrupt_claim = {});

} // namespace finalg
