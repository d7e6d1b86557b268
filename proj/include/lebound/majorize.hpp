#ifndef LEBOUND_MAJORIZE_HPP
#define LEBOUND_MAJORIZE_HPP

#include <initializer_list>
#include <vector>

#include "lebound/bigint.hpp"

namespace lebound {

// Multiset of non-negative integers, stored weakly decreasing. Comparisons
// treat missing positions as zeros, so trailing zeros never matter.
class Multiset {
public:
    Multiset() = default;
    Multiset(std::initializer_list<int> elems);
    explicit Multiset(std::vector<int> elems);

    const std::vector<int>& elems() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }

    // i-th largest element, 1-based; zero past the end.
    int nth(int i) const;

    Multiset united(const Multiset& other) const;

    // Equality up to trailing zeros.
    bool operator==(const Multiset& other) const;

private:
    std::vector<int> elems_;
};

// Sum of the min(k, |X|) largest elements; s_0 = 0.
long long s_k(const Multiset& x, int k);

// Sum of all elements.
long long s(const Multiset& x);

// X majorizes Y: equal totals and every prefix sum of X dominates Y's.
bool majorizes(const Multiset& x, const Multiset& y);

// Product of factorials of the elements; empty product is 1.
BigCount factorial_product(const Multiset& x);

// Forward direction of the factorial-Karamata inequality. Requires
// majorizes(x, y) (ContractError otherwise); the result is the theorem's
// claim and is expected to be true always.
bool karamata_factorial_check(const Multiset& x, const Multiset& y);

// majorizes(X, Y) and majorizes(X u Z, Y u Z) are equivalent; returns
// whether the two sides agree (expected true always).
bool union_equivalence(const Multiset& x, const Multiset& y, const Multiset& z);

// (X minus one copy of its m-th largest element) plus that value minus one.
// m is 1-based; RangeError when out of range, ContractError when x_m = 0.
Multiset decrement_exchange(const Multiset& x, int m);

// Exchange step: under the preconditions s(Y) = s(X) - 1,
// s_k(X) >= s_k(Y) >= s_k(X) - 1 for all k, and prefix equality below m,
// verifies x_m > 0 and that Y majorizes the decrement-exchange of X at m.
bool exchange_step_check(const Multiset& x, const Multiset& y, int m);

// Largest m usable with exchange_step_check: the first prefix index where
// the sums of X and Y diverge.
int first_divergence_index(const Multiset& x, const Multiset& y);

} // namespace lebound

#endif
