#include <doctest.h>

#include <algorithm>

#include "finalg/subset.hpp"

using finalg::SubSet;

TEST_CASE("subset basic operations") {
    SubSet s(70);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.set(0);
    s.set(65);
    CHECK(s.test(0));
    CHECK(s.test(65));
    CHECK_FALSE(s.test(1));
    CHECK(s.count() == 2);
    s.reset(65);
    CHECK_FALSE(s.test(65));
    CHECK(s.elements() == std::vector<int>{0});
}

TEST_CASE("subset constructors") {
    SubSet full(5, true);
    CHECK(full.is_full());
    CHECK(full.count() == 5);
    CHECK(SubSet::single(5, 3).elements() == std::vector<int>{3});
    CHECK(SubSet::of(6, {1, 4}).elements() == std::vector<int>{1, 4});
}

TEST_CASE("subset set algebra") {
    SubSet a = SubSet::of(8, {0, 2, 4});
    SubSet b = SubSet::of(8, {2, 3});
    CHECK((a | b) == SubSet::of(8, {0, 2, 3, 4}));
    CHECK((a & b) == SubSet::of(8, {2}));
    CHECK(a.contains(SubSet::of(8, {0, 4})));
    CHECK_FALSE(a.contains(b));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(SubSet::of(8, {1, 5})));
}

TEST_CASE("subset first_diff and str") {
    SubSet a = SubSet::of(8, {0, 2});
    SubSet b = SubSet::of(8, {0, 3});
    CHECK(a.first_diff(b) == 2);
    CHECK(a.first_diff(a) == -1);
    CHECK(a.str() == "{0,2}");
    CHECK(SubSet(4).str() == "{}");
}

TEST_CASE("canonical order: popcount first, then the first differing index") {
    SubSet small = SubSet::of(8, {7});
    SubSet big = SubSet::of(8, {0, 1});
    CHECK(SubSet::canonical_less(small, big));
    // same popcount: the set containing the first differing index sorts earlier
    SubSet a = SubSet::of(8, {0, 3});
    SubSet b = SubSet::of(8, {0, 5});
    CHECK(SubSet::canonical_less(a, b));
    CHECK_FALSE(SubSet::canonical_less(b, a));
    CHECK_FALSE(SubSet::canonical_less(a, a));
}

TEST_CASE("canonical order is a strict total order on all 4-element subsets") {
    std::vector<SubSet> all;
    for (int bits = 0; bits < 16; ++bits) {
        SubSet s(4);
        for (int i = 0; i < 4; ++i)
            if ((bits >> i) & 1) s.set(i);
        all.push_back(s);
    }
    std::sort(all.begin(), all.end(), SubSet::canonical_less);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        CHECK(SubSet::canonical_less(all[i], all[i + 1]));
        CHECK_FALSE(SubSet::canonical_less(all[i + 1], all[i]));
    }
}
