#include "finalg/subset.hpp"

#include <bit>

#include "finalg/error.hpp"

namespace finalg {

SubSet::SubSet(int universe, bool full) : universe_(universe) {
    if (universe < 0) throw error(errc::invalid_parameter, "negative universe");
    w_.assign((universe + 63) / 64, 0);
    if (full) {
        for (int i = 0; i < universe; ++i) set(i);
    }
}

SubSet SubSet::single(int universe, int e) {
    SubSet s(universe);
    s.set(e);
    return s;
}

SubSet SubSet::of(int universe, std::initializer_list<int> es) {
    SubSet s(universe);
    for (int e : es) s.set(e);
    return s;
}

int SubSet::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool SubSet::empty() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

bool SubSet::contains(const SubSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (other.w_[i] & ~w_[i]) return false;
    return true;
}

bool SubSet::intersects(const SubSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & other.w_[i]) return true;
    return false;
}

SubSet& SubSet::operator|=(const SubSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

SubSet& SubSet::operator&=(const SubSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

std::vector<int> SubSet::elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < universe_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

int SubSet::first_diff(const SubSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t d = w_[i] ^ other.w_[i];
        if (d) return int(i) * 64 + std::countr_zero(d);
    }
    return -1;
}

std::string SubSet::str() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

bool SubSet::canonical_less(const SubSet& a, const SubSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    int d = a.first_diff(b);
    if (d < 0) return false;
    return a.test(d);
}

} // namespace finalg
