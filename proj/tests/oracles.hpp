#pragma once

// Brute-force reference implementations, test-only. Each one applies the
// defining condition literally and enumerates candidates by scanning all
// 2^(order-1) subsets containing zero, so they are independent of the
// library's generator-closure enumerations. Feasible for order <= 16.

#include <vector>

#include "finalg/module.hpp"
#include "finalg/ring.hpp"

namespace oracle {

using finalg::Module;
using finalg::ModulePtr;
using finalg::Ring;
using finalg::RingPtr;
using finalg::SubSet;

inline bool is_ideal(const Ring& r, const SubSet& s) {
    if (!s.test(r.zero)) return false;
    for (int a : s.elements()) {
        if (!s.test(r.neg(a))) return false;
        for (int b : s.elements())
            if (!s.test(r.add(a, b))) return false;
        for (int x = 0; x < r.order; ++x)
            if (!s.test(r.mul(x, a)) || !s.test(r.mul(a, x))) return false;
    }
    return true;
}

inline bool is_submodule(const Module& m, const SubSet& s) {
    if (!s.test(m.zero)) return false;
    for (int a : s.elements()) {
        if (!s.test(m.neg(a))) return false;
        for (int b : s.elements())
            if (!s.test(m.add(a, b))) return false;
        for (int r = 0; r < m.ring->order; ++r)
            if (!s.test(m.act(r, a))) return false;
    }
    return true;
}

/// Every subset of {0..order-1} containing `zero` that passes `keep`.
template <class Keep>
std::vector<SubSet> scan_subsets(int order, int zero, Keep keep) {
    std::vector<SubSet> out;
    for (unsigned long long bits = 0; bits < (1ull << order); ++bits) {
        if (!((bits >> zero) & 1)) continue;
        SubSet s(order);
        for (int i = 0; i < order; ++i)
            if ((bits >> i) & 1) s.set(i);
        if (keep(s)) out.push_back(s);
    }
    return out;
}

inline std::vector<SubSet> ideals(const Ring& r) {
    return scan_subsets(r.order, r.zero, [&](const SubSet& s) { return is_ideal(r, s); });
}

inline std::vector<SubSet> submodules(const Module& m) {
    return scan_subsets(m.order, m.zero,
                        [&](const SubSet& s) { return is_submodule(m, s); });
}

/// AN ⊆ P read literally: every product an lands in P.
inline bool set_product_in(const Module& m, const SubSet& a, const SubSet& n,
                           const SubSet& p) {
    for (int x : a.elements())
        for (int y : n.elements())
            if (!p.test(m.act(x, y))) return false;
    return true;
}

inline bool full_action_in(const Module& m, int a, const SubSet& p) {
    for (int y = 0; y < m.order; ++y)
        if (!p.test(m.act(a, y))) return false;
    return true;
}

inline bool prime_submodule(const Module& m, const SubSet& p,
                            const std::vector<SubSet>& all_ideals,
                            const std::vector<SubSet>& all_submodules) {
    if (p.is_full()) return false;
    for (const SubSet& a : all_ideals)
        for (const SubSet& n : all_submodules) {
            if (!set_product_in(m, a, n, p)) continue;
            if (p.contains(n)) continue;
            bool am_in = true;
            for (int x : a.elements())
                if (!full_action_in(m, x, p)) { am_in = false; break; }
            if (!am_in) return false;
        }
    return true;
}

inline bool completely_prime_submodule(const Module& m, const SubSet& p) {
    if (p.is_full()) return false;
    for (int a = 0; a < m.ring->order; ++a)
        for (int x = 0; x < m.order; ++x)
            if (p.test(m.act(a, x)) && !p.test(x) && !full_action_in(m, a, p))
                return false;
    return true;
}

/// Intersection of all (completely) prime submodules containing n, scanning
/// the full subset lattice; whole module when none qualify.
inline SubSet radical(const Module& m, const SubSet& n, bool completely) {
    std::vector<SubSet> subs = submodules(m);
    std::vector<SubSet> ids;
    if (!completely) ids = ideals(*m.ring);
    SubSet acc(m.order, true);
    for (const SubSet& p : subs) {
        if (!p.contains(n)) continue;
        bool ok = completely ? completely_prime_submodule(m, p)
                             : prime_submodule(m, p, ids, subs);
        if (ok) acc &= p;
    }
    return acc;
}

/// E_M(N) by the definition: rm with r^k m in N for some k in [1, |R|].
inline SubSet envelope(const Module& m, const SubSet& n) {
    const Ring& r = *m.ring;
    SubSet out(m.order);
    for (int a = 0; a < r.order; ++a)
        for (int x = 0; x < m.order; ++x) {
            int pw = a;
            for (int k = 1; k <= r.order; ++k) {
                if (n.test(m.act(pw, x))) {
                    out.set(m.act(a, x));
                    break;
                }
                pw = r.mul(pw, a);
            }
        }
    return out;
}

/// Least submodule containing s: intersection of all scanned submodules
/// that contain it.
inline SubSet generated(const Module& m, const SubSet& s) {
    SubSet acc(m.order, true);
    for (const SubSet& sub : submodules(m))
        if (sub.contains(s)) acc &= sub;
    return acc;
}

} // namespace oracle
