#include "gdw/bitset.hpp"

#include <bit>
#include <stdexcept>

namespace gdw {

VertexSet::VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {
    if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
}

void VertexSet::clear() {
    for (auto& w : w_) w = 0;
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool VertexSet::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

int VertexSet::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

int VertexSet::next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t wi = size_t(i) >> 6;
    uint64_t w = w_[wi] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++wi; wi < w_.size(); ++wi)
        if (w_[wi]) return int(wi * 64 + std::countr_zero(w_[wi]));
    return -1;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    VertexSet r = *this;
    r &= o;
    return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    VertexSet r = *this;
    r |= o;
    return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
    VertexSet r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
}

VertexSet VertexSet::complement_in_universe() const {
    VertexSet r = full(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~w_[i];
    return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool VertexSet::lex_less(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t diff = w_[i] ^ o.w_[i];
        if (diff) {
            // sorted-sequence order: decided at the lowest differing vertex,
            // except that a set that is a prefix of the other comes first
            int v = static_cast<int>(i) * 64 + std::countr_zero(diff);
            if (test(v)) return o.next(v) >= 0;
            return next(v) < 0;
        }
    }
    return false;
}

std::vector<int> VertexSet::to_list() const {
    std::vector<int> r;
    for (int v = first(); v >= 0; v = next(v)) r.push_back(v);
    return r;
}

VertexSet VertexSet::of(int n, std::initializer_list<int> xs) {
    VertexSet s(n);
    for (int x : xs) s.set(x);
    return s;
}

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    for (size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~uint64_t(0);
    if (n & 63) s.w_.back() = (uint64_t(1) << (n & 63)) - 1;
    if (n == 0) s.w_.assign(s.w_.size(), 0);
    return s;
}

} // namespace gdw
