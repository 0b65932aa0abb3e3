#include "finalg/claims.hpp"

#include <algorithm>
#include <chrono>

#include "finalg/error.hpp"

namespace finalg {

namespace {

std::string sub_w(Analysis& a, int i, const std::string& detail) {
    return "N=" + a.submodules()[i].members.str() + ";" + detail;
}

// C1: commutative ring -> sqrt(I) equals the intersection of primes over I,
// for every ideal I.
std::vector<CaseOutcome> c1_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    bool comm = a.commutative();
    const auto& ideals = a.ideals();
    for (const Ideal& i : ideals) {
        CaseOutcome c;
        c.hyp = comm;
        if (c.hyp) {
            SubSet sq = sqrt_ideal(a.inst().ring, i.members);
            SubSet acc(a.R().order, true);
            bool any = false;
            for (const Ideal& p : ideals) {
                if (p.members.is_full() || !p.members.contains(i.members)) continue;
                if (is_prime_ideal(a.inst().ring, p, ideals)) {
                    acc &= p.members;
                    any = true;
                }
            }
            if (!any) acc = SubSet(a.R().order, true);
            c.concl = sq == acc;
            if (!c.concl)
                c.witness = "I=" + i.members.str() + ";sqrt=" + sq.str() + ";beta=" + acc.str();
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C2: <E(N)> contained in beta_co(N), every submodule.
std::vector<CaseOutcome> c2_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = true;
        c.concl = a.beta_co(i).contains(a.env_gen(i));
        if (!c.concl)
            c.witness = sub_w(a, i, "envgen=" + a.env_gen(i).str() +
                                        ";betaco=" + a.beta_co(i).str());
        out.push_back(std::move(c));
    }
    return out;
}

// C3: N completely semiprime -> E(N) = N.
std::vector<CaseOutcome> c3_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = a.csemiprime(i);
        if (c.hyp) {
            c.concl = a.env_raw(i) == a.submodules()[i].members;
            if (!c.concl) c.witness = sub_w(a, i, "raw=" + a.env_raw(i).str());
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C4: N completely semiprime -> E(N) is a submodule.
std::vector<CaseOutcome> c4_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = a.csemiprime(i);
        if (c.hyp) {
            c.concl = is_submodule_subset(a.M(), a.env_raw(i));
            if (!c.concl) c.witness = sub_w(a, i, "raw=" + a.env_raw(i).str());
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C5: all submodules completely semiprime -> every raw envelope is a submodule.
std::vector<CaseOutcome> c5_cases(Analysis& a) {
    CaseOutcome c;
    c.hyp = true;
    for (int i = 0; i < a.submodule_count(); ++i)
        if (!a.csemiprime(i)) { c.hyp = false; break; }
    if (c.hyp) {
        c.concl = true;
        for (int i = 0; i < a.submodule_count(); ++i)
            if (!is_submodule_subset(a.M(), a.env_raw(i))) {
                c.concl = false;
                c.witness = sub_w(a, i, "raw=" + a.env_raw(i).str());
                break;
            }
    }
    return {std::move(c)};
}

// C6: M 2-primal -> E(beta(M)) = beta(M).
std::vector<CaseOutcome> c6_cases(Analysis& a) {
    CaseOutcome c;
    c.hyp = a.two_primal_module();
    if (c.hyp) {
        const SubSet& b = a.beta(a.zero_index());
        int j = a.submodule_index(b);
        if (j < 0) throw error(errc::internal, "beta(M) is not a submodule");
        c.concl = a.env_raw(j) == b;
        if (!c.concl) c.witness = "betaM=" + b.str() + ";raw=" + a.env_raw(j).str();
    }
    return {std::move(c)};
}

// C7: N 2-primal -> <E(beta(N))>/N = beta(N)/N and <E(N)>/N contained in it.
std::vector<CaseOutcome> c7_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = a.two_primal(i);
        if (c.hyp) {
            const SubSet& b = a.beta(i);
            int j = a.submodule_index(b);
            if (j < 0) throw error(errc::internal, "beta(N) is not a submodule");
            // all sets involved contain N, so quotient-side equality reduces
            // to equality upstairs
            c.concl = a.env_gen(j) == b && b.contains(a.env_gen(i));
            if (!c.concl)
                c.witness = sub_w(a, i, "beta=" + b.str() + ";envgen(beta)=" + a.env_gen(j).str() +
                                            ";envgen=" + a.env_gen(i).str());
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C8: 2-primal N with beta(N)=N satisfies RF; the four fixed-point conditions
// are equivalent for 2-primal N.
std::vector<CaseOutcome> c8_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = a.two_primal(i);
        if (c.hyp) {
            const SubSet& n = a.submodules()[i].members;
            bool b1 = a.beta(i) == n;
            bool b2 = a.beta_co(i) == n;
            Analysis& q = a.quotient(i);
            int z = q.zero_index();
            SubSet zs = SubSet::single(q.M().order, q.M().zero);
            bool b3 = q.beta_co(z) == zs;
            bool b4 = q.beta(z) == zs;
            bool equiv = b1 == b2 && b2 == b3 && b3 == b4;
            c.concl = equiv && (!b1 || a.rf(i));
            if (!c.concl)
                c.witness = sub_w(a, i, "b1=" + std::to_string(b1) + ";b2=" + std::to_string(b2) +
                                            ";b3=" + std::to_string(b3) + ";b4=" +
                                            std::to_string(b4) + ";rf=" + std::to_string(a.rf(i)));
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C9: (commutative and prime) or completely prime submodules satisfy RF.
std::vector<CaseOutcome> c9_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = (a.commutative() && a.prime(i)) || a.cprime(i);
        if (c.hyp) {
            c.concl = a.rf(i);
            if (!c.concl) c.witness = sub_w(a, i, "sep=" + std::to_string(a.rf_separator(i)));
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C10: M 2-primal with beta(M)=beta(R)M or beta_co(M)=beta_co(R)M -> RF at 0.
std::vector<CaseOutcome> c10_cases(Analysis& a) {
    CaseOutcome c;
    Ideal br{a.inst().ring, a.beta_R()};
    Ideal bcr{a.inst().ring, a.betaco_R()};
    validate_ideal(br);  // finite-ring radicals are ideals; failure is a bug
    validate_ideal(bcr);
    Submodule full{a.inst().module, SubSet(a.M().order, true)};
    SubSet brm = ideal_submodule_product(br, full).members;
    SubSet bcrm = ideal_submodule_product(bcr, full).members;
    int z = a.zero_index();
    c.hyp = a.two_primal_module() && (a.beta(z) == brm || a.beta_co(z) == bcrm);
    if (c.hyp) {
        c.concl = a.rf(z);
        if (!c.concl) c.witness = "envgen=" + a.env_gen(z).str() + ";beta=" + a.beta(z).str();
    }
    return {std::move(c)};
}

// C11: free / idempotent-image modules satisfy beta(M)=beta(R)M and the
// completely prime analogue.
std::vector<CaseOutcome> c11_cases(Analysis& a) {
    CaseOutcome c;
    c.hyp = a.inst().tag_projective;
    if (c.hyp) {
        Ideal br{a.inst().ring, a.beta_R()};
        Ideal bcr{a.inst().ring, a.betaco_R()};
        Submodule full{a.inst().module, SubSet(a.M().order, true)};
        SubSet brm = ideal_submodule_product(br, full).members;
        SubSet bcrm = ideal_submodule_product(bcr, full).members;
        int z = a.zero_index();
        c.concl = a.beta(z) == brm && a.beta_co(z) == bcrm;
        if (!c.concl)
            c.witness = "betaM=" + a.beta(z).str() + ";betaRM=" + brm.str() +
                        ";betacoM=" + a.beta_co(z).str() + ";betacoRM=" + bcrm.str();
    }
    return {std::move(c)};
}

// C12: Chart-1 chain on every submodule.
std::vector<CaseOutcome> c12_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = true;
        c.concl = (!a.lz(i) || a.symmetric(i)) && (!a.symmetric(i) || a.ifp(i)) &&
                  (!a.ifp(i) || a.ssym(i)) && (!a.ssym(i) || a.two_primal(i)) &&
                  (!a.commutative() || a.symmetric(i)) && (!a.lz(i) || a.csemiprime(i));
        if (!c.concl)
            c.witness = sub_w(a, i, "lz=" + std::to_string(a.lz(i)) + ";sym=" +
                                        std::to_string(a.symmetric(i)) + ";ifp=" +
                                        std::to_string(a.ifp(i)) + ";ssym=" +
                                        std::to_string(a.ssym(i)) + ";2p=" +
                                        std::to_string(a.two_primal(i)));
        out.push_back(std::move(c));
    }
    return out;
}

bool c13_hyp(Analysis& a) {
    int z = a.zero_index();
    bool cls = a.ssym(z) || a.ifp(z) || a.symmetric(z) || a.lz(z) || a.commutative();
    return (a.inst().tag_free && (a.two_primal_module() || cls)) ||
           (a.inst().tag_projective && cls);
}

// C13: the 11 hypothesis combinations -> RF at the zero submodule.
std::vector<CaseOutcome> c13_cases(Analysis& a) {
    CaseOutcome c;
    c.hyp = c13_hyp(a);
    if (c.hyp) {
        int z = a.zero_index();
        c.concl = a.rf(z);
        if (!c.concl) c.witness = "envgen=" + a.env_gen(z).str() + ";beta=" + a.beta(z).str();
    }
    return {std::move(c)};
}

// C14: N in {LZ-CS, IFP, symmetric, semi-symmetric} with beta(N)=N -> RF at N.
std::vector<CaseOutcome> c14_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = (a.lz(i) || a.ifp(i) || a.symmetric(i) || a.ssym(i)) &&
                a.beta(i) == a.submodules()[i].members;
        if (c.hyp) {
            c.concl = a.rf(i);
            if (!c.concl) c.witness = sub_w(a, i, "envgen=" + a.env_gen(i).str());
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C15: RF transfers along canonical projections, both directions.
std::vector<CaseOutcome> c15_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int k = 0; k < a.submodule_count(); ++k) {
        const SubSet& kk = a.submodules()[k].members;
        Analysis& q = a.quotient(k);
        const ModuleHom& proj = a.quotient_proj(k);
        for (int i = 0; i < a.submodule_count(); ++i) {
            if (!a.submodules()[i].members.contains(kk)) continue;
            CaseOutcome c;
            c.hyp = a.rf(i);
            if (c.hyp) {
                Submodule img = hom_image(proj, a.submodules()[i]);
                int qi = q.submodule_index(img.members);
                if (qi < 0) throw error(errc::internal, "projected submodule missing");
                c.concl = q.rf(qi);
                if (!c.concl)
                    c.witness = "K=" + kk.str() + ";" + sub_w(a, i, "phiN=" + img.members.str());
            }
            out.push_back(std::move(c));
        }
        for (int j = 0; j < q.submodule_count(); ++j) {
            CaseOutcome c;
            c.hyp = q.rf(j);
            if (c.hyp) {
                Submodule pre = hom_preimage(proj, q.submodules()[j]);
                int pi = a.submodule_index(pre.members);
                if (pi < 0) throw error(errc::internal, "preimage submodule missing");
                c.concl = a.rf(pi);
                if (!c.concl)
                    c.witness = "K=" + kk.str() + ";N'=" + q.submodules()[j].members.str() +
                                ";preimage=" + pre.members.str();
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

// C16: any C13 hypothesis combination, or 2-primal projective -> the whole module satisfies RF.
std::vector<CaseOutcome> c16_cases(Analysis& a) {
    CaseOutcome c;
    c.hyp = c13_hyp(a) || (a.inst().tag_projective && a.two_primal_module());
    if (c.hyp) {
        c.concl = a.module_rf();
        if (!c.concl)
            for (int i = 0; i < a.submodule_count(); ++i)
                if (!a.rf(i)) {
                    c.witness = sub_w(a, i, "envgen=" + a.env_gen(i).str() +
                                                ";beta=" + a.beta(i).str());
                    break;
                }
    }
    return {std::move(c)};
}

// C17: semisimple ring + (2-primal module or commutative ring) -> module RF.
// Corpus-relative: the projectivity of modules over a semisimple ring is used
// implicitly; the check is the RF conclusion itself.
std::vector<CaseOutcome> c17_cases(Analysis& a) {
    CaseOutcome c;
    c.hyp = a.semisimple() && (a.two_primal_module() || a.commutative());
    if (c.hyp) {
        c.concl = a.module_rf();
        if (!c.concl)
            for (int i = 0; i < a.submodule_count(); ++i)
                if (!a.rf(i)) {
                    c.witness = sub_w(a, i, "envgen=" + a.env_gen(i).str());
                    break;
                }
    }
    return {std::move(c)};
}

// C18: corpus-relative absolutely-radical reading: every submodule a radical
// fixed point and in a Chart-1 class -> RF throughout.
std::vector<CaseOutcome> c18_cases(Analysis& a) {
    CaseOutcome c;
    c.hyp = true;
    for (int i = 0; i < a.submodule_count(); ++i)
        if (a.beta(i) != a.submodules()[i].members ||
            !(a.lz(i) || a.ifp(i) || a.symmetric(i) || a.ssym(i))) {
            c.hyp = false;
            break;
        }
    if (c.hyp) {
        c.concl = a.module_rf();
        if (!c.concl)
            for (int i = 0; i < a.submodule_count(); ++i)
                if (!a.rf(i)) {
                    c.witness = sub_w(a, i, "envgen=" + a.env_gen(i).str());
                    break;
                }
    }
    return {std::move(c)};
}

// C19: RF + inclusion -> 2-primal; 2-primal + inclusion -> RF at 0 in M/N.
std::vector<CaseOutcome> c19_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        bool incl = a.env_gen(i).contains(a.beta_co(i));
        CaseOutcome c1;
        c1.hyp = a.rf(i) && incl;
        if (c1.hyp) {
            c1.concl = a.two_primal(i);
            if (!c1.concl) c1.witness = sub_w(a, i, "direction=rf->2primal");
        }
        out.push_back(std::move(c1));
        CaseOutcome c2;
        c2.hyp = a.two_primal(i) && incl;
        if (c2.hyp) {
            Analysis& q = a.quotient(i);
            c2.concl = q.rf(q.zero_index());
            if (!c2.concl) c2.witness = sub_w(a, i, "direction=2primal->quotient-rf");
        }
        out.push_back(std::move(c2));
    }
    return out;
}

// C20: inclusion (3) at 0 -> (RF at 0 iff M 2-primal).
std::vector<CaseOutcome> c20_cases(Analysis& a) {
    CaseOutcome c;
    int z = a.zero_index();
    c.hyp = a.env_gen(z).contains(a.beta_co(z));
    if (c.hyp) {
        c.concl = a.rf(z) == a.two_primal_module();
        if (!c.concl)
            c.witness = "rf=" + std::to_string(a.rf(z)) +
                        ";2primal=" + std::to_string(a.two_primal_module());
    }
    return {std::move(c)};
}

// C21: beta_co(N)=N or <E(N)>=M guarantee the inclusion.
std::vector<CaseOutcome> c21_cases(Analysis& a) {
    std::vector<CaseOutcome> out;
    for (int i = 0; i < a.submodule_count(); ++i) {
        CaseOutcome c;
        c.hyp = a.beta_co(i) == a.submodules()[i].members || a.env_gen(i).is_full();
        if (c.hyp) {
            c.concl = a.env_gen(i).contains(a.beta_co(i));
            if (!c.concl)
                c.witness = sub_w(a, i, "betaco=" + a.beta_co(i).str() +
                                            ";envgen=" + a.env_gen(i).str());
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C22: existence target, never asserted: an instance where inclusion (3)
// fails at the zero submodule.
std::vector<CaseOutcome> c22_cases(Analysis& a) {
    CaseOutcome c;
    int z = a.zero_index();
    c.hyp = !a.env_gen(z).contains(a.beta_co(z));
    c.concl = c.hyp;
    if (c.hyp)
        c.witness = "betaco=" + a.beta_co(z).str() + ";envgen=" + a.env_gen(z).str();
    return {std::move(c)};
}

// C23: the three reduced-module characterizations agree.
std::vector<CaseOutcome> c23_cases(Analysis& a) {
    CaseOutcome c;
    c.hyp = true;
    bool x = reduced_lz(a.inst().module);
    bool y = reduced_square_kills_orbit(a.inst().module);
    bool z = reduced_split(a.inst().module);
    c.concl = x == y && y == z;
    if (!c.concl)
        c.witness = "lz=" + std::to_string(x) + ";sqorbit=" + std::to_string(y) +
                    ";split=" + std::to_string(z);
    return {std::move(c)};
}

} // namespace

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> reg = [] {
        std::vector<Claim> v;
        auto add = [&](std::string id, std::string desc, ClaimMode mode,
                       std::vector<CaseOutcome> (*fn)(Analysis&)) {
            v.push_back(Claim{std::move(id), std::move(desc), mode, fn});
        };
        add("C01", "commutative: sqrt(I) equals intersection of primes over I",
            ClaimMode::equality, c1_cases);
        add("C02", "<E(N)> contained in betaco(N)", ClaimMode::implication, c2_cases);
        add("C03", "completely semiprime N: E(N) = N", ClaimMode::equality, c3_cases);
        add("C04", "completely semiprime N: E(N) is a submodule", ClaimMode::implication,
            c4_cases);
        add("C05", "all submodules completely semiprime: every E(N) is a submodule",
            ClaimMode::implication, c5_cases);
        add("C06", "2-primal M: E(beta(M)) = beta(M)", ClaimMode::equality, c6_cases);
        add("C07", "2-primal N: <E(beta(N))>/N = beta(N)/N and <E(N)>/N inside it",
            ClaimMode::equality, c7_cases);
        add("C08", "2-primal N with beta(N)=N satisfies RF; fixed-point conditions equivalent",
            ClaimMode::implication, c8_cases);
        add("C09", "commutative prime or completely prime N satisfies RF",
            ClaimMode::implication, c9_cases);
        add("C10", "2-primal M with beta(M)=beta(R)M or betaco analogue: RF at 0",
            ClaimMode::implication, c10_cases);
        add("C11", "free/idempotent-image M: beta(M)=beta(R)M and betaco(M)=betaco(R)M",
            ClaimMode::equality, c11_cases);
        add("C12", "Chart-1 chain: LZ-CS => symmetric => IFP => semi-symmetric => 2-primal",
            ClaimMode::implication, c12_cases);
        add("C13", "the eleven class x (free|projective) combinations: RF at 0",
            ClaimMode::implication, c13_cases);
        add("C14", "Chart-1 class N with beta(N)=N satisfies RF", ClaimMode::implication,
            c14_cases);
        add("C15", "RF transfers along canonical projections (image and preimage)",
            ClaimMode::implication, c15_cases);
        add("C16", "C13 hypotheses or 2-primal projective: the module satisfies RF",
            ClaimMode::implication, c16_cases);
        add("C17", "semisimple ring, 2-primal or commutative: module satisfies RF",
            ClaimMode::implication, c17_cases);
        add("C18", "corpus-relative absolutely-radical reading implies RF throughout",
            ClaimMode::implication, c18_cases);
        add("C19", "RF+inclusion -> 2-primal; 2-primal+inclusion -> quotient RF at 0",
            ClaimMode::implication, c19_cases);
        add("C20", "inclusion (3): RF at 0 iff M is 2-primal", ClaimMode::implication,
            c20_cases);
        add("C21", "betaco(N)=N or <E(N)>=M guarantee the inclusion", ClaimMode::implication,
            c21_cases);
        add("C22", "existence: an instance violating inclusion (3) at 0 (hunted)",
            ClaimMode::existence, c22_cases);
        add("C23", "the three reduced-module characterizations agree", ClaimMode::equality,
            c23_cases);
        return v;
    }();
    return reg;
}

ClaimResult check_claim(const Claim& c, Analysis& a, bool corrupt) {
    ClaimResult res;
    res.claim_id = c.id;
    res.instance_id = a.inst().id;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CaseOutcome> cases;
    try {
        cases = c.cases(a);
    } catch (const error& e) {
        if (e.code() == errc::size_limit) {
            res.verdict = Verdict::skipped;
            res.witness = e.what();
            res.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
            return res;
        }
        throw;
    }
    bool any_hyp = false;
    if (c.mode == ClaimMode::existence) {
        res.verdict = Verdict::vacuous;
        for (const auto& k : cases)
            if (k.hyp && k.concl) {
                res.verdict = Verdict::holds;
                res.witness = k.witness;
                break;
            }
    } else {
        res.verdict = Verdict::vacuous;
        for (std::size_t ci = 0; ci < cases.size(); ++ci) {
            const auto& k = cases[ci];
            if (!k.hyp) continue;
            any_hyp = true;
            bool concl = corrupt ? !k.concl : k.concl;
            if (!concl) {
                res.verdict = Verdict::failed;
                res.witness = k.witness;
                if (corrupt && res.witness.empty())
                    res.witness = "case=" + std::to_string(ci) + ";negated-conclusion";
                break;
            }
        }
        if (res.verdict == Verdict::vacuous && any_hyp) res.verdict = Verdict::holds;
    }
    res.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return res;
}

std::vector<std::string> SuiteReport::fully_vacuous() const {
    std::vector<std::string> out;
    for (const auto& id : claim_ids) {
        auto it = tallies.find(id);
        if (it != tallies.end() && it->second.holds == 0 && it->second.failed == 0 &&
            it->second.vacuous > 0)
            out.push_back(id);
    }
    return out;
}

SuiteReport run_suite(std::vector<Instance> corpus, const std::set<std::string>& filter,
                      const std::string& corrupt_claim) {
    auto t0 = std::chrono::steady_clock::now();
    std::sort(corpus.begin(), corpus.end(),
              [](const Instance& a, const Instance& b) { return a.id < b.id; });
    SuiteReport rep;
    rep.instances = int(corpus.size());
    for (const Claim& c : claim_registry()) {
        if (!filter.empty() && !filter.count(c.id)) continue;
        rep.claim_ids.push_back(c.id);
        rep.tallies[c.id] = {};
    }
    for (const Instance& inst : corpus) {
        Analysis a(inst);
        for (const Claim& c : claim_registry()) {
            if (!filter.empty() && !filter.count(c.id)) continue;
            ClaimResult r = check_claim(c, a, c.id == corrupt_claim);
            auto& t = rep.tallies[c.id];
            switch (r.verdict) {
            case Verdict::holds: ++t.holds; break;
            case Verdict::vacuous: ++t.vacuous; break;
            case Verdict::failed: ++t.failed; break;
            case Verdict::skipped: ++t.skipped; break;
            }
            if (r.verdict == Verdict::failed) rep.failures.push_back(r);
            rep.results.push_back(std::move(r));
        }
    }
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

} // namespace finalg
