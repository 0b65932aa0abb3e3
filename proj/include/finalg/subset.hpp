#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace finalg {

/// Subset of {0,...,universe-1} as a packed bit vector. Houses arbitrary
/// element sets (radicals, envelopes, colon sets) that need not be closed
/// under any operation.
class SubSet {
public:
    SubSet() = default;
    explicit SubSet(int universe, bool full = false);
    static SubSet single(int universe, int e);
    static SubSet of(int universe, std::initializer_list<int> es);

    int universe() const { return universe_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    int count() const;
    bool empty() const;
    bool is_full() const { return count() == universe_; }
    /// true iff other ⊆ this
    bool contains(const SubSet& other) const;
    bool intersects(const SubSet& other) const;

    SubSet& operator|=(const SubSet& o);
    SubSet& operator&=(const SubSet& o);
    friend SubSet operator|(SubSet a, const SubSet& b) { a |= b; return a; }
    friend SubSet operator&(SubSet a, const SubSet& b) { a &= b; return a; }
    bool operator==(const SubSet&) const = default;

    std::vector<int> elements() const;
    /// smallest index where membership differs; -1 when equal
    int first_diff(const SubSet& other) const;
    std::string str() const;

    /// (popcount, lexicographic bits) order used by every enumeration;
    /// at the first differing index the set containing it sorts earlier.
    static bool canonical_less(const SubSet& a, const SubSet& b);

private:
    int universe_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace finalg
