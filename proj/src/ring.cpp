#include "finalg/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "finalg/error.hpp"
#include "finalg/ideal.hpp"

namespace finalg {

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::atoi(v);
}

Limits initial_limits() {
    Limits l;
    l.ring_order_max = env_int("FINALG_RING_ORDER_MAX", l.ring_order_max);
    l.ring_lattice_max = env_int("FINALG_RING_LATTICE_MAX", l.ring_lattice_max);
    l.module_order_max = env_int("FINALG_MODULE_ORDER_MAX", l.module_order_max);
    l.module_lattice_max = env_int("FINALG_MODULE_LATTICE_MAX", l.module_lattice_max);
    return l;
}

} // namespace

Limits& limits() {
    static Limits l = initial_limits();
    return l;
}

int Ring::pow(int x, int k) const {
    int acc = x;
    for (int i = 1; i < k; ++i) acc = mul(acc, x);
    return acc;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingPtr validate_ring(int order, std::vector<int> add, std::vector<int> mul,
                      std::string label) {
    if (order <= 0) throw error(errc::invalid_parameter, "ring order must be positive");
    if (order > limits().ring_order_max)
        throw error(errc::size_limit,
                    "ring order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(limits().ring_order_max));
    auto dims_ok = [&](const std::vector<int>& t) {
        if (int(t.size()) != order * order) return false;
        for (int v : t)
            if (v < 0 || v >= order) return false;
        return true;
    };
    if (!dims_ok(add)) throw error(errc::validation, "add table malformed for " + label);
    if (!dims_ok(mul)) throw error(errc::validation, "mul table malformed for " + label);

    auto a = [&](int x, int y) { return add[x * order + y]; };
    auto m = [&](int x, int y) { return mul[x * order + y]; };

    // additive identity
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
                    throw error(errc::validation,
                                label + ": addition not associative at (" + std::to_string(x) +
                                    "," + std::to_string(y) + "," + std::to_string(z) + ")");

    std::vector<int> neg(order, -1);
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y)
            if (a(x, y) == zero) { neg[x] = y; break; }
        if (neg[x] < 0)
            throw error(errc::validation, label + ": no additive inverse for " + std::to_string(x));
    }

    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            for (int z = 0; z < order; ++z)
                if (m(m(x, y), z) != m(x, m(y, z)))
                    throw error(errc::validation,
                                label + ": multiplication not associative at (" + std::to_string(x) +
                                    "," + std::to_string(y) + "," + std::to_string(z) + ")");

    int one = -1;
    for (int e = 0; e < order && one < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < order && ok; ++x) ok = m(e, x) == x && m(x, e) == x;
        if (ok) one = e;
    }
    if (one < 0) throw error(errc::validation, label + ": no-unit");
    if (order > 1 && one == zero)
        throw error(errc::validation, label + ": 1 = 0 in a ring of order > 1");

    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            for (int z = 0; z < order; ++z) {
                if (m(x, a(y, z)) != a(m(x, y), m(x, z)))
                    throw error(errc::validation,
                                label + ": left distributivity fails at (" + std::to_string(x) +
                                    "," + std::to_string(y) + "," + std::to_string(z) + ")");
                if (m(a(x, y), z) != a(m(x, z), m(y, z)))
                    throw error(errc::validation,
                                label + ": right distributivity fails at (" + std::to_string(x) +
                                    "," + std::to_string(y) + "," + std::to_string(z) + ")");
            }

    auto r = std::make_shared<Ring>();
    r->order = order;
    r->add_table = std::move(add);
    r->mul_table = std::move(mul);
    r->neg_table = std::move(neg);
    r->zero = zero;
    r->one = one;
    r->label = std::move(label);
    r->commutative = true;
    for (int x = 0; x < order && r->commutative; ++x)
        for (int y = 0; y < order; ++y)
            if (r->mul(x, y) != r->mul(y, x)) { r->commutative = false; break; }
    return r;
}

RingPtr make_cyclic_ring(int n) {
    if (n <= 0) throw error(errc::invalid_parameter, "cyclic ring needs n >= 1");
    std::vector<int> add(n * n), mul(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            add[x * n + y] = (x + y) % n;
            mul[x * n + y] = (x * y) % n;
        }
    return validate_ring(n, std::move(add), std::move(mul), "Z" + std::to_string(n));
}

namespace {

// Matrix element codec: entries in row-major order are base-p digits,
// the first listed entry being the least significant.
struct MatCodec {
    int p, k;
    bool tri;
    std::vector<std::pair<int, int>> slots; // (row, col) of each digit

    MatCodec(int p_, int k_, bool tri_) : p(p_), k(k_), tri(tri_) {
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                if (!tri || r <= c) slots.emplace_back(r, c);
    }
    long long order() const {
        long long o = 1;
        for (std::size_t i = 0; i < slots.size(); ++i) o *= p;
        return o;
    }
    std::vector<int> decode(int idx) const {
        std::vector<int> m(k * k, 0);
        for (auto [r, c] : slots) {
            m[r * k + c] = idx % p;
            idx /= p;
        }
        return m;
    }
    int encode(const std::vector<int>& m) const {
        int idx = 0;
        for (auto it = slots.rbegin(); it != slots.rend(); ++it)
            idx = idx * p + m[it->first * k + it->second];
        return idx;
    }
};

} // namespace

RingPtr make_matrix_ring(int p, int k, bool triangular) {
    if (!is_prime(p)) throw error(errc::invalid_parameter, "p must be prime");
    if (k < 1) throw error(errc::invalid_parameter, "k must be >= 1");
    MatCodec codec(p, k, triangular);
    long long n = codec.order();
    if (n > limits().ring_order_max)
        throw error(errc::size_limit, "matrix ring order " + std::to_string(n) +
                                          " exceeds bound " +
                                          std::to_string(limits().ring_order_max));
    int order = int(n);
    std::vector<int> add(order * order), mul(order * order);
    std::vector<std::vector<int>> mats(order);
    for (int i = 0; i < order; ++i) mats[i] = codec.decode(i);
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            std::vector<int> s(k * k), pr(k * k, 0);
            for (int e = 0; e < k * k; ++e) s[e] = (mats[x][e] + mats[y][e]) % p;
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    int acc = 0;
                    for (int t = 0; t < k; ++t) acc += mats[x][r * k + t] * mats[y][t * k + c];
                    pr[r * k + c] = acc % p;
                }
            add[x * order + y] = codec.encode(s);
            mul[x * order + y] = codec.encode(pr);
        }
    std::string label = (triangular ? "U" : "M") + std::to_string(k) + "(F" + std::to_string(p) + ")";
    return validate_ring(order, std::move(add), std::move(mul), std::move(label));
}

RingPtr make_product_ring(const RingPtr& a, const RingPtr& b) {
    long long n = (long long)a->order * b->order;
    if (n > limits().ring_order_max)
        throw error(errc::size_limit, "product ring order " + std::to_string(n) +
                                          " exceeds bound " +
                                          std::to_string(limits().ring_order_max));
    int order = int(n), bo = b->order;
    auto pack = [&](int x, int y) { return x * bo + y; };
    std::vector<int> add(order * order), mul(order * order);
    for (int x1 = 0; x1 < a->order; ++x1)
        for (int y1 = 0; y1 < bo; ++y1)
            for (int x2 = 0; x2 < a->order; ++x2)
                for (int y2 = 0; y2 < bo; ++y2) {
                    int i = pack(x1, y1), j = pack(x2, y2);
                    add[i * order + j] = pack(a->add(x1, x2), b->add(y1, y2));
                    mul[i * order + j] = pack(a->mul(x1, x2), b->mul(y1, y2));
                }
    return validate_ring(order, std::move(add), std::move(mul), a->label + "x" + b->label);
}

std::pair<RingPtr, std::vector<int>> make_quotient_ring(const RingPtr& r, const Ideal& i) {
    if (i.ring.get() != r.get() || i.members.universe() != r->order)
        throw error(errc::invalid_ideal, "ideal does not belong to the ring");
    validate_ideal(i); // throws invalid-ideal on any closure violation

    int n = r->order;
    // coset representative = minimal element index of x + I
    std::vector<int> rep(n);
    for (int x = 0; x < n; ++x) {
        int best = x;
        for (int t : i.members.elements()) best = std::min(best, r->add(x, t));
        rep[x] = best;
    }
    std::vector<int> reps;
    std::map<int, int> idx;
    for (int x = 0; x < n; ++x)
        if (rep[x] == x) {
            idx[x] = int(reps.size());
            reps.push_back(x);
        }
    int q = int(reps.size());
    std::vector<int> add(q * q), mul(q * q), coset(n);
    for (int x = 0; x < n; ++x) coset[x] = idx[rep[x]];
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            add[a * q + b] = coset[r->add(reps[a], reps[b])];
            mul[a * q + b] = coset[r->mul(reps[a], reps[b])];
        }
    auto qr = validate_ring(q, std::move(add), std::move(mul),
                            r->label + "/" + i.members.str());
    return {qr, coset};
}

} // namespace finalg
