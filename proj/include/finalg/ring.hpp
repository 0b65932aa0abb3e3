#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "finalg/subset.hpp"

namespace finalg {

/// Size bounds. Arithmetic bounds cap table construction; lattice bounds cap
/// ideal/submodule enumeration, which is the expensive quantifier.
struct Limits {
    int ring_order_max = 256;
    int ring_lattice_max = 64;
    int module_order_max = 4096;
    int module_lattice_max = 256;
};

/// Process-wide bounds, adjustable by the CLI and by FINALG_* env vars.
Limits& limits();

/// Finite unital associative ring over element indices 0..order-1.
/// Immutable after validation; all operations on it are pure.
struct Ring {
    int order = 0;
    std::vector<int> add_table; // order*order, row-major
    std::vector<int> mul_table;
    std::vector<int> neg_table;
    int zero = 0;
    int one = 0;
    std::string label;
    bool commutative = false;

    int add(int x, int y) const { return add_table[x * order + y]; }
    int mul(int x, int y) const { return mul_table[x * order + y]; }
    int neg(int x) const { return neg_table[x]; }
    int pow(int x, int k) const; // k >= 1
    bool table_equal(const Ring& o) const {
        return order == o.order && add_table == o.add_table && mul_table == o.mul_table;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

struct Ideal {
    RingPtr ring;
    SubSet members;
};

/// Checks every ring axiom; reports the first violation with a witness.
RingPtr validate_ring(int order, std::vector<int> add, std::vector<int> mul,
                      std::string label);

RingPtr make_cyclic_ring(int n);
RingPtr make_matrix_ring(int p, int k, bool triangular);
RingPtr make_product_ring(const RingPtr& a, const RingPtr& b);
/// Returns the quotient ring together with the coset map r-element -> q-element.
std::pair<RingPtr, std::vector<int>> make_quotient_ring(const RingPtr& r, const Ideal& i);

bool is_prime(int p);

} // namespace finalg
