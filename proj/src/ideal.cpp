#include "finalg/ideal.hpp"

#include <algorithm>

#include "finalg/error.hpp"

namespace finalg {

namespace {

SubSet additive_closure(const Ring& r, SubSet s) {
    s.set(r.zero);
    bool changed = true;
    while (changed) {
        changed = false;
        auto es = s.elements();
        for (int x : es)
            for (int y : es) {
                int z = r.add(x, y);
                if (!s.test(z)) {
                    s.set(z);
                    changed = true;
                }
            }
    }
    return s;
}

} // namespace

bool is_ideal_subset(const Ring& r, const SubSet& s) {
    if (!s.test(r.zero)) return false;
    for (int x : s.elements()) {
        if (!s.test(r.neg(x))) return false;
        for (int y : s.elements())
            if (!s.test(r.add(x, y))) return false;
        for (int a = 0; a < r.order; ++a)
            if (!s.test(r.mul(a, x)) || !s.test(r.mul(x, a))) return false;
    }
    return true;
}

void validate_ideal(const Ideal& i) {
    const Ring& r = *i.ring;
    const SubSet& s = i.members;
    if (s.universe() != r.order)
        throw error(errc::invalid_ideal, "member set universe mismatch");
    if (!s.test(r.zero)) throw error(errc::invalid_ideal, "ideal misses zero");
    for (int x : s.elements()) {
        if (!s.test(r.neg(x)))
            throw error(errc::invalid_ideal, "not closed under negation at " + std::to_string(x));
        for (int y : s.elements())
            if (!s.test(r.add(x, y)))
                throw error(errc::invalid_ideal, "not closed under addition at (" +
                                                     std::to_string(x) + "," + std::to_string(y) + ")");
        for (int a = 0; a < r.order; ++a) {
            if (!s.test(r.mul(a, x)))
                throw error(errc::invalid_ideal, "not closed under left multiplication at (" +
                                                     std::to_string(a) + "," + std::to_string(x) + ")");
            if (!s.test(r.mul(x, a)))
                throw error(errc::invalid_ideal, "not closed under right multiplication at (" +
                                                     std::to_string(x) + "," + std::to_string(a) + ")");
        }
    }
}

Ideal ideal_generated(const RingPtr& r, const SubSet& s) {
    SubSet cur = s;
    cur.set(r->zero);
    bool changed = true;
    while (changed) {
        changed = false;
        auto es = cur.elements();
        for (int x : es) {
            int nx = r->neg(x);
            if (!cur.test(nx)) { cur.set(nx); changed = true; }
            for (int y : es) {
                int z = r->add(x, y);
                if (!cur.test(z)) { cur.set(z); changed = true; }
            }
            for (int a = 0; a < r->order; ++a) {
                int l = r->mul(a, x), rr = r->mul(x, a);
                if (!cur.test(l)) { cur.set(l); changed = true; }
                if (!cur.test(rr)) { cur.set(rr); changed = true; }
            }
        }
    }
    return Ideal{r, cur};
}

SubSet ideal_product(const Ring& r, const SubSet& a, const SubSet& b) {
    SubSet prod(r.order);
    for (int x : a.elements())
        for (int y : b.elements()) prod.set(r.mul(x, y));
    return additive_closure(r, prod);
}

SubSet ideal_sum(const Ring& r, const SubSet& a, const SubSet& b) {
    return additive_closure(r, a | b);
}

std::vector<Ideal> enumerate_ideals(const RingPtr& r) {
    if (r->order > limits().ring_lattice_max)
        throw error(errc::size_limit, "ideal enumeration bound exceeded for order " +
                                          std::to_string(r->order));
    std::vector<SubSet> found;
    auto insert = [&](const SubSet& s) {
        if (std::find(found.begin(), found.end(), s) == found.end()) {
            found.push_back(s);
            if (int(found.size()) > limits().ring_lattice_max)
                throw error(errc::size_limit, "ideal lattice of " + r->label +
                                                  " exceeds bound " +
                                                  std::to_string(limits().ring_lattice_max));
            return true;
        }
        return false;
    };
    for (int a = 0; a < r->order; ++a)
        insert(ideal_generated(r, SubSet::single(r->order, a)).members);
    // every ideal is a join of principal ideals
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t n = found.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (insert(ideal_sum(*r, found[i], found[j]))) changed = true;
    }
    std::sort(found.begin(), found.end(), SubSet::canonical_less);
    std::vector<Ideal> out;
    out.reserve(found.size());
    for (auto& s : found) out.push_back(Ideal{r, std::move(s)});
    return out;
}

bool is_prime_ideal(const RingPtr& r, const Ideal& i, const std::vector<Ideal>& all) {
    if (i.members.is_full())
        throw error(errc::invalid_parameter, "prime test needs a proper ideal");
    for (const Ideal& a : all)
        for (const Ideal& b : all) {
            if (i.members.contains(a.members) || i.members.contains(b.members)) continue;
            if (i.members.contains(ideal_product(*r, a.members, b.members))) return false;
        }
    return true;
}

bool is_prime_ideal(const RingPtr& r, const Ideal& i) {
    return is_prime_ideal(r, i, enumerate_ideals(r));
}

bool is_completely_prime_ideal(const RingPtr& r, const Ideal& i) {
    if (i.members.is_full())
        throw error(errc::invalid_parameter, "prime test needs a proper ideal");
    for (int a = 0; a < r->order; ++a)
        for (int b = 0; b < r->order; ++b)
            if (i.members.test(r->mul(a, b)) && !i.members.test(a) && !i.members.test(b))
                return false;
    return true;
}

namespace {

SubSet radical_from(const RingPtr& r, const std::vector<Ideal>& all, bool completely) {
    SubSet acc(r->order, true);
    bool any = false;
    for (const Ideal& i : all) {
        if (i.members.is_full()) continue;
        bool prime = completely ? is_completely_prime_ideal(r, i) : is_prime_ideal(r, i, all);
        if (prime) {
            acc &= i.members;
            any = true;
        }
    }
    if (!any) return SubSet(r->order, true);
    return acc;
}

} // namespace

SubSet ring_prime_radical(const RingPtr& r, const std::vector<Ideal>& all) {
    return radical_from(r, all, false);
}
SubSet ring_prime_radical(const RingPtr& r) {
    return radical_from(r, enumerate_ideals(r), false);
}
SubSet ring_completely_prime_radical(const RingPtr& r, const std::vector<Ideal>& all) {
    return radical_from(r, all, true);
}
SubSet ring_completely_prime_radical(const RingPtr& r) {
    return radical_from(r, enumerate_ideals(r), true);
}

SubSet sqrt_ideal(const RingPtr& r, const SubSet& i) {
    SubSet out(r->order);
    for (int a = 0; a < r->order; ++a) {
        int p = a;
        for (int k = 1; k <= r->order; ++k) {
            if (i.test(p)) {
                out.set(a);
                break;
            }
            p = r->mul(p, a);
        }
    }
    return out;
}

bool is_2primal_ring(const RingPtr& r) {
    auto all = enumerate_ideals(r);
    SubSet beta = ring_prime_radical(r, all);
    bool two_primal = sqrt_ideal(r, SubSet::single(r->order, r->zero)) == beta;
    // cited equivalence: 2-primal iff beta_co(R) = beta(R)
    bool via_radicals = ring_completely_prime_radical(r, all) == beta;
    if (two_primal != via_radicals)
        throw error(errc::internal, "2-primal characterizations disagree on " + r->label);
    return two_primal;
}

bool is_2primal_ideal(const RingPtr& r, const Ideal& i) {
    if (i.members.is_full())
        throw error(errc::invalid_parameter, "2-primal test needs a proper ideal");
    auto [q, coset] = make_quotient_ring(r, i);
    auto all = enumerate_ideals(q);
    return ring_prime_radical(q, all) == ring_completely_prime_radical(q, all);
}

std::vector<SubSet> enumerate_left_ideals(const RingPtr& r) {
    if (r->order > limits().ring_lattice_max)
        throw error(errc::size_limit, "left ideal enumeration bound exceeded");
    auto left_gen = [&](int g) {
        SubSet cur = SubSet::single(r->order, g);
        cur.set(r->zero);
        bool changed = true;
        while (changed) {
            changed = false;
            auto es = cur.elements();
            for (int x : es) {
                for (int y : es) {
                    int z = r->add(x, y);
                    if (!cur.test(z)) { cur.set(z); changed = true; }
                }
                for (int a = 0; a < r->order; ++a) {
                    int l = r->mul(a, x);
                    if (!cur.test(l)) { cur.set(l); changed = true; }
                }
            }
        }
        return cur;
    };
    std::vector<SubSet> found;
    auto insert = [&](const SubSet& s) {
        if (std::find(found.begin(), found.end(), s) == found.end()) {
            found.push_back(s);
            return true;
        }
        return false;
    };
    for (int g = 0; g < r->order; ++g) insert(left_gen(g));
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t n = found.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                SubSet u = found[i] | found[j];
                // additive closure keeps it a left ideal
                bool grew = true;
                while (grew) {
                    grew = false;
                    auto es = u.elements();
                    for (int x : es)
                        for (int y : es) {
                            int z = r->add(x, y);
                            if (!u.test(z)) { u.set(z); grew = true; }
                        }
                }
                if (insert(u)) changed = true;
            }
    }
    std::sort(found.begin(), found.end(), SubSet::canonical_less);
    return found;
}

Ideal jacobson_radical(const RingPtr& r) {
    auto lefts = enumerate_left_ideals(r);
    // maximal proper left ideals
    SubSet acc(r->order, true);
    bool any = false;
    for (const SubSet& l : lefts) {
        if (l.is_full()) continue;
        bool maximal = true;
        for (const SubSet& m : lefts)
            if (!m.is_full() && m != l && m.contains(l)) { maximal = false; break; }
        if (maximal) {
            acc &= l;
            any = true;
        }
    }
    if (!any) acc = SubSet(r->order, true);
    Ideal j{r, acc};
    validate_ideal(j); // J(R) is two-sided; failure would be an internal bug
    return j;
}

} // namespace finalg
