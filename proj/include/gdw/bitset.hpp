#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gdw {

// Vertex set over a fixed universe {0..n-1}, packed into 64-bit words.
// All binary operations require equal universe sizes.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n);

    int universe() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear();

    int count() const;
    bool any() const;
    bool none() const { return !any(); }

    // Lowest member, or -1. next(i) is the lowest member strictly above i.
    int first() const;
    int next(int i) const;

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator|(const VertexSet& o) const;
    VertexSet minus(const VertexSet& o) const;
    VertexSet complement_in_universe() const;

    bool intersects(const VertexSet& o) const;
    bool subset_of(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const = default;

    // Lexicographic order on the sorted member sequences; a set that is a
    // prefix of another comes first, so {0} < {0,5} < {0,7} < {1}.
    bool lex_less(const VertexSet& o) const;

    std::vector<int> to_list() const;
    static VertexSet of(int n, std::initializer_list<int> xs);
    static VertexSet full(int n);

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace gdw
