#ifndef LEBOUND_ELEMENT_SET_HPP
#define LEBOUND_ELEMENT_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lebound {

// Subset of poset elements 0..n-1 as a word-sized bitmask (n <= 64).
struct ElementSet {
    std::uint64_t bits = 0;

    ElementSet() = default;
    explicit ElementSet(std::uint64_t b) : bits(b) {}

    static ElementSet of(std::initializer_list<int> elems) {
        ElementSet s;
        for (int e : elems) s.add(e);
        return s;
    }
    static ElementSet full(int n) {
        return ElementSet(n >= 64 ? ~0ull : ((1ull << n) - 1));
    }
    static ElementSet single(int e) { return ElementSet(1ull << e); }

    bool has(int e) const { return (bits >> e) & 1ull; }
    void add(int e) { bits |= 1ull << e; }
    void remove(int e) { bits &= ~(1ull << e); }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits | b.bits); }
    friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits & b.bits); }
    friend ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits & ~b.bits); }
    friend bool operator==(ElementSet a, ElementSet b) { return a.bits == b.bits; }
};

} // namespace lebound

#endif
