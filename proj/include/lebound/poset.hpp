#ifndef LEBOUND_POSET_HPP
#define LEBOUND_POSET_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lebound/element_set.hpp"

namespace lebound {

// Finite strict partial order on elements 0..n-1. Immutable after
// construction: `less` is the full reachability relation (irreflexive,
// transitive, antisymmetric), `covers` its transitive reduction.
class Poset {
public:
    Poset() = default;

    // Builds the poset whose strict order is the transitive closure of
    // `pairs` (each meaning u < v). Pairs need not be cover relations;
    // the reduction is recomputed. Throws RangeError on bad indices,
    // CycleError if the closure would be reflexive anywhere.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }
    bool less(int u, int v) const { return less_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    bool comparable(int u, int v) const { return less(u, v) || less(v, u); }

    // Cover pairs (u,v), sorted lexicographically.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    // Strict-order pairs (u,v) with u < v in the order.
    std::vector<std::pair<int, int>> relation_pairs() const;

    // {u : u < v} / {u : v < u} as bitmasks; require n <= 64.
    ElementSet below(int v) const;
    ElementSet above(int v) const;

    bool operator==(const Poset& other) const {
        return n_ == other.n_ && less_ == other.less_;
    }

private:
    int n_ = 0;
    std::vector<std::uint8_t> less_; // n*n row-major reachability
    std::vector<std::pair<int, int>> covers_;
};

// True iff no two distinct members of S are comparable. Empty sets pass.
bool is_antichain(const Poset& p, ElementSet s);

// True iff every two distinct members of S are comparable.
bool is_chain(const Poset& p, ElementSet s);

// The antichain {x : nothing lies above x}; non-empty when n >= 1.
ElementSet maximal_elements(const Poset& p);

struct SubposetResult {
    Poset poset;
    std::vector<int> original_index; // new index -> index in the parent poset
};

// Order restricted to the elements outside `removed`; comparabilities among
// kept elements are preserved exactly.
SubposetResult induced_subposet(const Poset& p, ElementSet removed);

// Every labeled poset on n elements whose order respects the element index,
// obtained by closing all edge subsets of the i<j complete DAG and
// deduplicating. Guarded at n <= 5.
std::vector<Poset> generate_all(int n);

// Independent i<j edges with the given probability, then transitive closure.
// Deterministic in (n, density, seed).
Poset random_poset(int n, double density, std::uint64_t seed);

} // namespace lebound

#endif
