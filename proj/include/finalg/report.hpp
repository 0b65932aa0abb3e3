#pragma once

#include <iosfwd>

#include "finalg/claims.hpp"
#include "finalg/hunter.hpp"

namespace finalg {

/// Full single-instance analysis: lattice summary, per-submodule classes,
/// radicals, envelope, RF and 2-primal verdicts.
void write_check_report(std::ostream& os, Analysis& a);

/// Human-readable suite summary. Deterministic except for the header line
/// (prefixed "# ") that carries the wall time.
void write_suite_report(std::ostream& os, const SuiteReport& rep);

/// One line-delimited JSON record per ClaimResult.
void write_suite_records(std::ostream& os, const SuiteReport& rep);

void write_findings(std::ostream& os, const Findings& f);
/// Line-delimited records: one per hit plus a trailing summary record.
void write_findings_records(std::ostream& os, const Findings& f);

/// Submodule lattice with generator certificates and Hasse cover relations.
void write_lattice(std::ostream& os, Analysis& a);

} // namespace finalg
