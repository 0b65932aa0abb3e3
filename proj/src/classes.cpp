#include "finalg/classes.hpp"

#include "finalg/error.hpp"
#include "finalg/primal.hpp"

namespace finalg {

std::string ClassWitness::str() const {
    std::string out = "(a=" + std::to_string(a);
    if (b >= 0) out += ",b=" + std::to_string(b);
    out += ",m=" + std::to_string(m) + ")";
    return out;
}

bool is_lz_completely_semiprime(const Submodule& n, ClassWitness* w) {
    const Module& m = *n.module;
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a) {
        SubSet aM(m.order);
        for (int x = 0; x < m.order; ++x) aM.set(m.act(a, x));
        for (int x = 0; x < m.order; ++x) {
            if (!n.members.test(m.act(a, x))) continue;
            for (int t = 0; t < r.order; ++t) {
                int rx = m.act(t, x);
                if (aM.test(rx) && !n.members.test(rx)) {
                    if (w) *w = {a, -1, x};
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_symmetric_submodule(const Submodule& n, ClassWitness* w) {
    const Module& m = *n.module;
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a)
        for (int b = 0; b < r.order; ++b)
            for (int x = 0; x < m.order; ++x)
                if (n.members.test(m.act(a, m.act(b, x))) &&
                    !n.members.test(m.act(b, m.act(a, x)))) {
                    if (w) *w = {a, b, x};
                    return false;
                }
    return true;
}

bool is_ifp_submodule(const Submodule& n, ClassWitness* w) {
    const Module& m = *n.module;
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a)
        for (int x = 0; x < m.order; ++x) {
            if (!n.members.test(m.act(a, x))) continue;
            for (int t = 0; t < r.order; ++t)
                if (!n.members.test(m.act(a, m.act(t, x)))) {
                    if (w) *w = {a, t, x};
                    return false;
                }
        }
    return true;
}

bool is_semi_symmetric_submodule(const Submodule& n, ClassWitness* w) {
    const Module& m = *n.module;
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a) {
        int a2 = r.mul(a, a);
        Ideal pa = ideal_generated(m.ring, SubSet::single(r.order, a));
        std::vector<int> a2_elems;
        bool built = false;
        for (int x = 0; x < m.order; ++x) {
            if (!n.members.test(m.act(a2, x))) continue;
            if (!built) {
                a2_elems = ideal_product(r, pa.members, pa.members).elements();
                built = true;
            }
            for (int y : a2_elems)
                if (!n.members.test(m.act(y, x))) {
                    if (w) *w = {a, y, x};
                    return false;
                }
        }
    }
    return true;
}

ClassVector classify(const Submodule& n) {
    validate_submodule(n);
    ClassVector v;
    ClassWitness w;
    v.lz_cs = is_lz_completely_semiprime(n, &w);
    if (!v.lz_cs) v.lz_cs_w = w;
    v.symmetric = is_symmetric_submodule(n, &w);
    if (!v.symmetric) v.symmetric_w = w;
    v.ifp = is_ifp_submodule(n, &w);
    if (!v.ifp) v.ifp_w = w;
    v.semi_symmetric = is_semi_symmetric_submodule(n, &w);
    if (!v.semi_symmetric) v.semi_symmetric_w = w;
    v.cs_def12 = n.members.is_full() || kernel::completely_semiprime(*n.module, n.members);
    if (!v.cs_def12) {
        // recover a witness pair (a, m) with a²m in N, am not in N
        const Module& m = *n.module;
        const Ring& r = *m.ring;
        for (int a = 0; a < r.order && !v.cs_def12_w; ++a) {
            int a2 = r.mul(a, a);
            for (int x = 0; x < m.order; ++x)
                if (n.members.test(m.act(a2, x)) && !n.members.test(m.act(a, x))) {
                    v.cs_def12_w = ClassWitness{a, -1, x};
                    break;
                }
        }
    }
    v.two_primal = is_2primal_submodule(n);

    const bool chain_ok = (!v.lz_cs || v.symmetric) && (!v.symmetric || v.ifp) &&
                          (!v.ifp || v.semi_symmetric) && (!v.semi_symmetric || v.two_primal) &&
                          (!n.module->ring->commutative || v.symmetric) &&
                          (!v.lz_cs || v.cs_def12);
    if (!chain_ok)
        throw error(errc::internal, "Chart-1 implication chain broken at " + n.members.str() +
                                        " in " + n.module->label);
    return v;
}

bool reduced_lz(const ModulePtr& mp) {
    Submodule z{mp, SubSet::single(mp->order, mp->zero)};
    return is_lz_completely_semiprime(z);
}

bool reduced_square_kills_orbit(const ModulePtr& mp) {
    const Module& m = *mp;
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a) {
        int a2 = r.mul(a, a);
        for (int x = 0; x < m.order; ++x) {
            if (m.act(a2, x) != m.zero) continue;
            for (int t = 0; t < r.order; ++t)
                if (m.act(a, m.act(t, x)) != m.zero) return false;
        }
    }
    return true;
}

bool reduced_split(const ModulePtr& mp) {
    const Module& m = *mp;
    const Ring& r = *m.ring;
    for (int a = 0; a < r.order; ++a) {
        int a2 = r.mul(a, a);
        for (int x = 0; x < m.order; ++x) {
            if (m.act(a, x) == m.zero) {
                for (int t = 0; t < r.order; ++t)
                    if (m.act(a, m.act(t, x)) != m.zero) return false;
            }
            if (m.act(a2, x) == m.zero && m.act(a, x) != m.zero) return false;
        }
    }
    return true;
}

} // namespace finalg
