#include "finalg/module.hpp"

#include <algorithm>
#include <map>

#include "finalg/error.hpp"

namespace finalg {

ModulePtr validate_module(const RingPtr& r, int order, std::vector<int> add,
                          std::vector<int> act, std::string label) {
    if (order <= 0) throw error(errc::invalid_parameter, "module order must be positive");
    if (order > limits().module_order_max)
        throw error(errc::size_limit, "module order " + std::to_string(order) +
                                          " exceeds bound " +
                                          std::to_string(limits().module_order_max));
    if (int(add.size()) != order * order)
        throw error(errc::validation, label + ": add table malformed");
    if (int(act.size()) != r->order * order)
        throw error(errc::validation, label + ": action table malformed");
    for (int v : add)
        if (v < 0 || v >= order) throw error(errc::validation, label + ": add entry out of range");
    for (int v : act)
        if (v < 0 || v >= order) throw error(errc::validation, label + ": act entry out of range");

    auto a = [&](int x, int y) { return add[x * order + y]; };
    auto s = [&](int rr, int m) { return act[rr * order + m]; };

    int zero = -1;
    for (int z = 0; z < order && zero < 0; ++z) {
        bool ok = true;
        for (int x = 0; x < order && ok; ++x) ok = a(z, x) == x && a(x, z) == x;
        if (ok) zero = z;
    }
    if (zero < 0) throw error(errc::validation, label + ": no additive identity");
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            if (a(x, y) != a(y, x))
                throw error(errc::validation, label + ": addition not commutative at (" +
                                                  std::to_string(x) + "," + std::to_string(y) + ")");
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            for (int z = 0; z < order; ++z)
                if (a(a(x, y), z) != a(x, a(y, z)))
                    throw error(errc::validation, label + ": addition not associative");
    std::vector<int> neg(order, -1);
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y)
            if (a(x, y) == zero) { neg[x] = y; break; }
        if (neg[x] < 0) throw error(errc::validation, label + ": no additive inverse");
    }

    for (int rr = 0; rr < r->order; ++rr)
        for (int x = 0; x < order; ++x)
            for (int y = 0; y < order; ++y)
                if (s(rr, a(x, y)) != a(s(rr, x), s(rr, y)))
                    throw error(errc::validation, label + ": r(m+m') = rm+rm' fails at (" +
                                                      std::to_string(rr) + "," + std::to_string(x) +
                                                      "," + std::to_string(y) + ")");
    for (int r1 = 0; r1 < r->order; ++r1)
        for (int r2 = 0; r2 < r->order; ++r2)
            for (int x = 0; x < order; ++x) {
                if (s(r->add(r1, r2), x) != a(s(r1, x), s(r2, x)))
                    throw error(errc::validation, label + ": (r+r')m = rm+r'm fails at (" +
                                                      std::to_string(r1) + "," + std::to_string(r2) +
                                                      "," + std::to_string(x) + ")");
                if (s(r->mul(r1, r2), x) != s(r1, s(r2, x)))
                    throw error(errc::validation, label + ": (rr')m = r(r'm) fails at (" +
                                                      std::to_string(r1) + "," + std::to_string(r2) +
                                                      "," + std::to_string(x) + ")");
            }
    for (int x = 0; x < order; ++x)
        if (s(r->one, x) != x)
            throw error(errc::validation, label + ": 1m = m fails at " + std::to_string(x));

    auto m = std::make_shared<Module>();
    m->ring = r;
    m->order = order;
    m->add_table = std::move(add);
    m->neg_table = std::move(neg);
    m->act_table = std::move(act);
    m->zero = zero;
    m->label = std::move(label);
    return m;
}

bool is_submodule_subset(const Module& m, const SubSet& s) {
    if (!s.test(m.zero)) return false;
    for (int x : s.elements()) {
        if (!s.test(m.neg(x))) return false;
        for (int y : s.elements())
            if (!s.test(m.add(x, y))) return false;
        for (int r = 0; r < m.ring->order; ++r)
            if (!s.test(m.act(r, x))) return false;
    }
    return true;
}

void validate_submodule(const Submodule& n) {
    if (!n.module || n.members.universe() != n.module->order)
        throw error(errc::invalid_submodule, "member set universe mismatch");
    if (!is_submodule_subset(*n.module, n.members))
        throw error(errc::invalid_submodule, "subset " + n.members.str() +
                                                 " is not a submodule of " + n.module->label);
}

ModuleHom validate_hom(const ModulePtr& source, const ModulePtr& target,
                       std::vector<int> map) {
    if (int(map.size()) != source->order)
        throw error(errc::validation, "hom map size mismatch");
    if (source->ring.get() != target->ring.get())
        throw error(errc::ring_mismatch, "hom endpoints over different rings");
    for (int v : map)
        if (v < 0 || v >= target->order) throw error(errc::validation, "hom map out of range");
    for (int x = 0; x < source->order; ++x)
        for (int y = 0; y < source->order; ++y)
            if (map[source->add(x, y)] != target->add(map[x], map[y]))
                throw error(errc::validation, "hom not additive at (" + std::to_string(x) + "," +
                                                  std::to_string(y) + ")");
    for (int r = 0; r < source->ring->order; ++r)
        for (int x = 0; x < source->order; ++x)
            if (map[source->act(r, x)] != target->act(r, map[x]))
                throw error(errc::validation, "hom not action-equivariant at (" +
                                                  std::to_string(r) + "," + std::to_string(x) + ")");
    SubSet image(target->order);
    for (int v : map) image.set(v);
    ModuleHom h;
    h.source = source;
    h.target = target;
    h.map = std::move(map);
    h.surjective = image.is_full();
    return h;
}

ModulePtr regular_module(const RingPtr& r) {
    std::vector<int> add = r->add_table;
    std::vector<int> act = r->mul_table;
    return validate_module(r, r->order, std::move(add), std::move(act), "reg(" + r->label + ")");
}

ModulePtr free_module(const RingPtr& r, int rank) {
    if (rank < 1) throw error(errc::invalid_parameter, "rank must be >= 1");
    long long n = 1;
    for (int i = 0; i < rank; ++i) {
        n *= r->order;
        if (n > limits().module_order_max)
            throw error(errc::size_limit, "free module order exceeds bound");
    }
    int order = int(n), d = r->order;
    auto digit = [&](int idx, int i) {
        for (int t = 0; t < i; ++t) idx /= d;
        return idx % d;
    };
    std::vector<int> add(order * order), act((long long)d * order);
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            int out = 0, mult = 1;
            for (int i = 0; i < rank; ++i) {
                out += r->add(digit(x, i), digit(y, i)) * mult;
                mult *= d;
            }
            add[x * order + y] = out;
        }
    for (int rr = 0; rr < d; ++rr)
        for (int x = 0; x < order; ++x) {
            int out = 0, mult = 1;
            for (int i = 0; i < rank; ++i) {
                out += r->mul(rr, digit(x, i)) * mult;
                mult *= d;
            }
            act[rr * order + x] = out;
        }
    return validate_module(r, order, std::move(add), std::move(act),
                           "free(" + r->label + "," + std::to_string(rank) + ")");
}

ModulePtr column_module(const RingPtr& matrix_ring, int p, int k) {
    if (!is_prime(p)) throw error(errc::invalid_parameter, "p must be prime");
    long long n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    if (n > limits().module_order_max)
        throw error(errc::size_limit, "column module order exceeds bound");
    int order = int(n);
    auto digit = [&](int idx, int i) {
        for (int t = 0; t < i; ++t) idx /= p;
        return idx % p;
    };
    std::vector<int> add(order * order), act((long long)matrix_ring->order * order);
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            int out = 0, mult = 1;
            for (int i = 0; i < k; ++i) {
                out += ((digit(x, i) + digit(y, i)) % p) * mult;
                mult *= p;
            }
            add[x * order + y] = out;
        }
    // matrix index decodes exactly as in make_matrix_ring: row-major digits,
    // first entry least significant
    auto mat_entry = [&](int midx, int row, int col) {
        int pos = row * k + col;
        for (int t = 0; t < pos; ++t) midx /= p;
        return midx % p;
    };
    for (int m = 0; m < matrix_ring->order; ++m)
        for (int x = 0; x < order; ++x) {
            int out = 0, mult = 1;
            for (int row = 0; row < k; ++row) {
                int acc = 0;
                for (int col = 0; col < k; ++col) acc += mat_entry(m, row, col) * digit(x, col);
                out += (acc % p) * mult;
                mult *= p;
            }
            act[m * order + x] = out;
        }
    return validate_module(matrix_ring, order, std::move(add), std::move(act),
                           "col(F" + std::to_string(p) + "^" + std::to_string(k) + ")");
}

std::pair<ModulePtr, ModuleHom> quotient_module(const ModulePtr& m, const Submodule& n) {
    if (n.module.get() != m.get())
        throw error(errc::invalid_submodule, "submodule does not belong to the module");
    validate_submodule(n);
    int order = m->order;
    std::vector<int> rep(order);
    auto nelems = n.members.elements();
    for (int x = 0; x < order; ++x) {
        int best = x;
        for (int t : nelems) best = std::min(best, m->add(x, t));
        rep[x] = best;
    }
    std::vector<int> reps;
    std::map<int, int> idx;
    for (int x = 0; x < order; ++x)
        if (rep[x] == x) {
            idx[x] = int(reps.size());
            reps.push_back(x);
        }
    int q = int(reps.size());
    std::vector<int> coset(order);
    for (int x = 0; x < order; ++x) coset[x] = idx[rep[x]];
    std::vector<int> add(q * q), act((long long)m->ring->order * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) add[a * q + b] = coset[m->add(reps[a], reps[b])];
    for (int r = 0; r < m->ring->order; ++r)
        for (int a = 0; a < q; ++a) act[r * q + a] = coset[m->act(r, reps[a])];
    auto qm = validate_module(m->ring, q, std::move(add), std::move(act),
                              m->label + "/" + n.members.str());
    ModuleHom proj = validate_hom(m, qm, coset);
    return {qm, proj};
}

IdempotentImage idempotent_image(const ModulePtr& m, const ModuleHom& e) {
    if (e.source.get() != m.get() || e.target.get() != m.get())
        throw error(errc::domain_mismatch, "expected an endomorphism of the given module");
    for (int x = 0; x < m->order; ++x)
        if (e.map[e.map[x]] != e.map[x])
            throw error(errc::not_idempotent, "e(e(x)) != e(x) at x=" + std::to_string(x));
    std::vector<int> elems;
    std::map<int, int> idx;
    for (int x = 0; x < m->order; ++x)
        if (e.map[x] == x) {
            idx[x] = int(elems.size());
            elems.push_back(x);
        }
    // image = fixed points of an idempotent
    int q = int(elems.size());
    std::vector<int> add(q * q), act((long long)m->ring->order * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) add[a * q + b] = idx.at(m->add(elems[a], elems[b]));
    for (int r = 0; r < m->ring->order; ++r)
        for (int a = 0; a < q; ++a) act[r * q + a] = idx.at(m->act(r, elems[a]));
    auto im = validate_module(m->ring, q, std::move(add), std::move(act), "im_e(" + m->label + ")");
    ModuleHom inc = validate_hom(im, m, elems);
    return {im, inc};
}

Submodule submodule_generated(const ModulePtr& m, const SubSet& s) {
    SubSet cur = s;
    cur.set(m->zero);
    bool changed = true;
    while (changed) {
        changed = false;
        auto es = cur.elements();
        for (int x : es) {
            int nx = m->neg(x);
            if (!cur.test(nx)) { cur.set(nx); changed = true; }
            for (int y : es) {
                int z = m->add(x, y);
                if (!cur.test(z)) { cur.set(z); changed = true; }
            }
            for (int r = 0; r < m->ring->order; ++r) {
                int z = m->act(r, x);
                if (!cur.test(z)) { cur.set(z); changed = true; }
            }
        }
    }
    return Submodule{m, cur};
}

namespace {

SubSet module_additive_closure(const Module& m, SubSet s) {
    s.set(m.zero);
    bool changed = true;
    while (changed) {
        changed = false;
        auto es = s.elements();
        for (int x : es)
            for (int y : es) {
                int z = m.add(x, y);
                if (!s.test(z)) { s.set(z); changed = true; }
            }
    }
    return s;
}

} // namespace

std::vector<Submodule> enumerate_submodules(const ModulePtr& m) {
    if (m->order > limits().module_lattice_max)
        throw error(errc::size_limit, "submodule enumeration bound exceeded for order " +
                                          std::to_string(m->order));
    std::vector<SubSet> found;
    auto insert = [&](const SubSet& s) {
        if (std::find(found.begin(), found.end(), s) == found.end()) {
            found.push_back(s);
            if (int(found.size()) > limits().module_lattice_max)
                throw error(errc::size_limit,
                            "submodule lattice of " + m->label + " exceeds bound " +
                                std::to_string(limits().module_lattice_max));
            return true;
        }
        return false;
    };
    for (int x = 0; x < m->order; ++x)
        insert(submodule_generated(m, SubSet::single(m->order, x)).members);
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t n = found.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (insert(module_additive_closure(*m, found[i] | found[j]))) changed = true;
    }
    std::sort(found.begin(), found.end(), SubSet::canonical_less);
    std::vector<Submodule> out;
    out.reserve(found.size());
    for (auto& s : found) out.push_back(Submodule{m, std::move(s)});
    return out;
}

SubSet colon(const Submodule& p, const SubSet& s) {
    if (s.empty()) throw error(errc::empty_set, "colon needs a nonempty set");
    const Module& m = *p.module;
    SubSet out(m.ring->order);
    auto es = s.elements();
    for (int r = 0; r < m.ring->order; ++r) {
        bool ok = true;
        for (int x : es)
            if (!p.members.test(m.act(r, x))) { ok = false; break; }
        if (ok) out.set(r);
    }
    return out;
}

Submodule ideal_submodule_product(const Ideal& a, const Submodule& n) {
    const Module& m = *n.module;
    if (a.ring.get() != m.ring.get())
        throw error(errc::ring_mismatch, "ideal and submodule over different rings");
    SubSet prod(m.order);
    for (int x : a.members.elements())
        for (int y : n.members.elements()) prod.set(m.act(x, y));
    return Submodule{n.module, module_additive_closure(m, prod)};
}

Submodule hom_image(const ModuleHom& h, const Submodule& n) {
    if (n.module.get() != h.source.get())
        throw error(errc::domain_mismatch, "submodule not in hom source");
    SubSet img(h.target->order);
    for (int x : n.members.elements()) img.set(h.map[x]);
    Submodule out = submodule_generated(h.target, img);
    // image of a submodule under a module hom is a submodule; closure must be a no-op
    if (out.members != img)
        throw error(errc::internal, "hom image failed submodule closure check");
    return out;
}

Submodule hom_preimage(const ModuleHom& h, const Submodule& nprime) {
    if (nprime.module.get() != h.target.get())
        throw error(errc::domain_mismatch, "submodule not in hom target");
    SubSet pre(h.source->order);
    for (int x = 0; x < h.source->order; ++x)
        if (nprime.members.test(h.map[x])) pre.set(x);
    return Submodule{h.source, pre};
}

} // namespace finalg
