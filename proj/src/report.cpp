#include "finalg/report.hpp"

#include <ostream>

#include <json.hpp>

namespace finalg {

using nlohmann::json;

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

} // namespace

void write_check_report(std::ostream& os, Analysis& a) {
    os << "instance: " << a.inst().id << "\n";
    os << "ring: " << a.R().label << " (order " << a.R().order
       << (a.commutative() ? ", commutative" : ", noncommutative") << ")\n";
    os << "  sqrt(0) = " << a.sqrt0_R().str() << "\n";
    os << "  beta(R) = " << a.beta_R().str() << ", beta_co(R) = " << a.betaco_R().str()
       << "\n";
    os << "  2-primal ring: " << yn(a.ring_2primal()) << ", semisimple: " << yn(a.semisimple())
       << "\n";
    os << "module: " << a.M().label << " (order " << a.M().order << ")\n";
    os << "  submodules: " << a.submodule_count() << "\n";
    os << "  2-primal module: " << yn(a.two_primal_module()) << "\n";
    os << "  module satisfies RF: " << yn(a.module_rf()) << "\n";
    for (int i = 0; i < a.submodule_count(); ++i) {
        const Submodule& n = a.submodules()[i];
        os << "submodule " << i << ": " << n.members.str() << "\n";
        os << "  prime=" << a.prime(i) << " cprime=" << a.cprime(i)
           << " semiprime=" << a.semiprime(i) << " csemiprime=" << a.csemiprime(i) << "\n";
        os << "  classes: lz_cs=" << a.lz(i) << " symmetric=" << a.symmetric(i)
           << " ifp=" << a.ifp(i) << " semi_symmetric=" << a.ssym(i)
           << " two_primal=" << a.two_primal(i) << "\n";
        os << "  beta = " << a.beta(i).str() << ", beta_co = " << a.beta_co(i).str() << "\n";
        os << "  E(N) = " << a.env_raw(i).str() << ", <E(N)> = " << a.env_gen(i).str() << "\n";
        os << "  RF: " << yn(a.rf(i));
        if (!a.rf(i)) os << " (separating element " << a.rf_separator(i) << ")";
        os << "\n";
    }
}

void write_suite_report(std::ostream& os, const SuiteReport& rep) {
    os << "# wall_ms=" << rep.wall_ms << "\n";
    os << "corpus: " << rep.corpus_desc << " (" << rep.instances << " instances)\n";
    for (const auto& id : rep.claim_ids) {
        const ClaimTally& t = rep.tallies.at(id);
        os << id << ": holds=" << t.holds << " vacuous=" << t.vacuous << " failed=" << t.failed
           << " skipped=" << t.skipped << "\n";
    }
    for (const auto& id : rep.fully_vacuous())
        os << "warning: " << id << " vacuous on the whole corpus (extend the corpus)\n";
    if (rep.clean()) {
        os << "result: PASS (0 FAILED)\n";
    } else {
        os << "result: FAIL (" << rep.failures.size() << " FAILED)\n";
        for (const ClaimResult& f : rep.failures)
            os << "  " << f.claim_id << " @ " << f.instance_id << " witness: " << f.witness
               << "\n";
    }
}

void write_suite_records(std::ostream& os, const SuiteReport& rep) {
    for (const ClaimResult& r : rep.results) {
        json j{{"claim", r.claim_id},
               {"instance", r.instance_id},
               {"verdict", verdict_name(r.verdict)},
               {"witness", r.witness.empty() ? json() : json(r.witness)},
               {"micros", r.micros}};
        os << j.dump() << "\n";
    }
}

void write_findings(std::ostream& os, const Findings& f) {
    os << "target: " << hunt_target_name(f.target) << " (" << hunt_target_description(f.target)
       << ")\n";
    os << "examined: " << f.examined << ", hits: " << f.hits.size() << "\n";
    for (const Hit& h : f.hits)
        os << "  hit " << h.instance_id << " witness: " << h.witness << "\n";
    if (f.hits.empty())
        os << "no candidate found among " << f.examined << " instances\n";
    else
        os << "hits are candidate witnesses; they require mathematical review\n";
}

void write_findings_records(std::ostream& os, const Findings& f) {
    for (const Hit& h : f.hits) {
        json j{{"target", hunt_target_name(f.target)},
               {"instance", h.instance_id},
               {"witness", h.witness},
               {"recipe", json::parse(h.recipe)}};
        os << j.dump() << "\n";
    }
    json summary{{"target", hunt_target_name(f.target)},
                 {"examined", f.examined},
                 {"budget", f.budget},
                 {"hits", f.hits.size()}};
    os << summary.dump() << "\n";
}

void write_lattice(std::ostream& os, Analysis& a) {
    const auto& subs = a.submodules();
    os << "module: " << a.M().label << " over " << a.R().label << "\n";
    os << "nodes: " << subs.size() << "\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        // greedy generator certificate
        SubSet span = SubSet::single(a.M().order, a.M().zero);
        std::vector<int> gens;
        for (int e : subs[i].members.elements()) {
            if (span.test(e)) continue;
            gens.push_back(e);
            SubSet g = span;
            g.set(e);
            span = submodule_generated(a.inst().module, g).members;
        }
        os << "  node " << i << ": " << subs[i].members.str() << " = <";
        for (std::size_t g = 0; g < gens.size(); ++g)
            os << (g ? "," : "") << gens[g];
        os << ">\n";
    }
    int edges = 0;
    std::string lines;
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < subs.size(); ++j) {
            if (i == j) continue;
            if (!subs[j].members.contains(subs[i].members) || subs[i].members == subs[j].members)
                continue;
            bool cover = true;
            for (std::size_t k = 0; k < subs.size() && cover; ++k) {
                if (k == i || k == j) continue;
                if (subs[k].members.contains(subs[i].members) &&
                    subs[j].members.contains(subs[k].members) &&
                    subs[k].members != subs[i].members && subs[k].members != subs[j].members)
                    cover = false;
            }
            if (cover) {
                ++edges;
                lines += "  " + std::to_string(i) + " -< " + std::to_string(j) + "\n";
            }
        }
    os << "cover edges: " << edges << "\n" << lines;
}

} // namespace finalg
