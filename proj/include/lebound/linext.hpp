#ifndef LEBOUND_LINEXT_HPP
#define LEBOUND_LINEXT_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lebound/bigint.hpp"
#include "lebound/element_set.hpp"
#include "lebound/poset.hpp"

namespace lebound {

// Order-preserving ranking of poset elements. ranks[x] is the position of x
// in {1..n}; a full extension is a bijection onto {1..n}. An extension of
// P-x is kept in the ambient indexing: ranks[x] == 0 (sentinel) and the
// other values form a bijection onto {2..n}.
struct LinearExtension {
    std::vector<int> ranks;

    bool operator==(const LinearExtension& other) const { return ranks == other.ranks; }
};

// Validation helpers. The *_minus form checks an extension of P-x stored in
// ambient indexing as described above.
bool is_valid_extension(const Poset& p, const LinearExtension& ext);
bool is_valid_extension_minus(const Poset& p, int x, const LinearExtension& ext);

// Exact e(P) via dynamic programming over the downset lattice:
// e(empty) = 1, e(D) = sum of e(D - x) over maximal x of D.
// Guarded at n <= 24 (memoization memory).
BigCount count_extensions(const Poset& p);

// Calls fn for every linear extension, lexicographically by the element
// sequence in rank order. Guarded at n <= 10.
void for_each_extension(const Poset& p, const std::function<void(const LinearExtension&)>& fn);
std::vector<LinearExtension> enumerate_extensions(const Poset& p);

// All extensions of P-x in ambient indexing (values {2..n}, sentinel at x).
std::vector<LinearExtension> enumerate_extensions_minus(const Poset& p, int x);

// Greedy falling chain from x: repeatedly step to the element below with the
// largest f-value. Returns x itself first. f must rank every element below x.
std::vector<int> greedy_falling_chain(const Poset& p, int x, const LinearExtension& f);

// Greedy increasing chain of g: start at g^{-1}(1), repeatedly step to the
// element above with the smallest g-value. Always a maximal chain.
std::vector<int> greedy_increasing_chain(const Poset& p, const LinearExtension& g);

// Injection from extensions of P-x (x in the antichain A) into extensions of
// P: shift the f-values one step down the greedy falling chain from x and
// seat rank 1 at its bottom.
LinearExtension greedy_inject(const Poset& p, ElementSet a, int x, const LinearExtension& f);

// Inverse direction: walk the greedy increasing chain of g; if it meets A
// (necessarily in exactly one element x), undo the shift and return (x, f)
// with greedy_inject(p, a, x, f) == g. Otherwise g is outside the image.
std::optional<std::pair<int, LinearExtension>> greedy_recover(const Poset& p, ElementSet a,
                                                              const LinearExtension& g);

struct RecurrenceGap {
    BigCount sum;   // sum over x in A of e(P-x)
    BigCount total; // e(P)
};

// sum <= total always; equality when A meets every maximal chain.
RecurrenceGap recurrence_gap(const Poset& p, ElementSet a);

} // namespace lebound

#endif
