#pragma once

#include <vector>

#include "finalg/ring.hpp"

namespace finalg {

/// Throws invalid-ideal with a witness unless members is a two-sided ideal.
void validate_ideal(const Ideal& i);
bool is_ideal_subset(const Ring& r, const SubSet& s);

/// Least two-sided ideal containing s (closure under +, -, and left/right
/// multiplication by every ring element, to fixpoint).
Ideal ideal_generated(const RingPtr& r, const SubSet& s);

/// Additive closure of {ab : a in A, b in B}; an ideal when A and B are.
SubSet ideal_product(const Ring& r, const SubSet& a, const SubSet& b);
/// Additive closure of A ∪ B.
SubSet ideal_sum(const Ring& r, const SubSet& a, const SubSet& b);

/// All two-sided ideals: principal ideals closed under pairwise sum,
/// sorted by (popcount, lexicographic bits).
std::vector<Ideal> enumerate_ideals(const RingPtr& r);

bool is_prime_ideal(const RingPtr& r, const Ideal& i);
bool is_prime_ideal(const RingPtr& r, const Ideal& i, const std::vector<Ideal>& all);
bool is_completely_prime_ideal(const RingPtr& r, const Ideal& i);

/// Intersection of all prime (resp. completely prime) ideals; the whole
/// ring when none exist.
SubSet ring_prime_radical(const RingPtr& r);
SubSet ring_prime_radical(const RingPtr& r, const std::vector<Ideal>& all);
SubSet ring_completely_prime_radical(const RingPtr& r);
SubSet ring_completely_prime_radical(const RingPtr& r, const std::vector<Ideal>& all);

/// {a : a^n in I for some n in [1, order]}. The power sequence of any
/// element repeats within order steps, so this range captures every
/// distinct power; returned as a plain set since it need not be an ideal.
SubSet sqrt_ideal(const RingPtr& r, const SubSet& i);

bool is_2primal_ring(const RingPtr& r);
bool is_2primal_ideal(const RingPtr& r, const Ideal& i);

/// Intersection of all maximal left ideals; the whole ring when none exist.
Ideal jacobson_radical(const RingPtr& r);

/// All left ideals (left-cyclic generators closed under pairwise sum).
std::vector<SubSet> enumerate_left_ideals(const RingPtr& r);

} // namespace finalg
