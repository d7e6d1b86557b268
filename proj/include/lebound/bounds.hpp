#ifndef LEBOUND_BOUNDS_HPP
#define LEBOUND_BOUNDS_HPP

#include <vector>

#include "lebound/bigint.hpp"
#include "lebound/element_set.hpp"
#include "lebound/partition.hpp"
#include "lebound/poset.hpp"

namespace lebound {

// Two-sided sandwich of the extension count:
//   prod a_i!  <=  e(P)  <=  n! / prod c_i!
// where a/c are the antichain/chain cover parameters.
struct BoundsReport {
    int n = 0;
    Partition a;
    Partition c;
    BigCount lower; // prod a_i!
    BigCount e;     // exact extension count
    BigCount upper; // n! / prod c_i!
    bool holds = false;
    double log_ratio = 0.0; // ln(upper / lower)
};

// prod a_i!, exact.
BigCount lower_bound(const Partition& a);

// The multinomial n! / prod c_i!, exact; the division always comes out even
// and that is asserted. ContractError if the parts do not sum to n.
BigCount upper_bound(int n, const Partition& c);

// Full report for one poset; counting is subject to the n <= 24 guard.
BoundsReport check_bounds(const Poset& p);

// prod |b_i|! over an antichain partition of P. ContractError unless the
// blocks are disjoint antichains covering every element.
BigCount antichain_partition_bound(const Poset& p, const std::vector<ElementSet>& blocks);

// Exact harmonic number 1 + 1/2 + ... + 1/n.
BigRational harmonic(int n);

struct AccuracyResult {
    double lhs_log = 0.0; // ln(prod a_i! * prod c_i!), c conjugate to a
    double rhs_log = 0.0; // n * (ln n - 1 - ln H_n)
    bool holds = false;   // lhs >= rhs - 1e-9
};

// Closeness of the two bounds: with c conjugate to a, the product of both
// factorial products is at least (n / (e H_n))^n. Checked in log space with
// exact rational H_n and a 1e-9 slack charged against success.
AccuracyResult accuracy_check(const Partition& a);

// prod c_i! equals prod_k k^{a_k} exactly (c conjugate to a).
bool power_identity_check(const Partition& a);

// a! >= ((a+1)/e)^a for all 0 <= a <= a_max, in log space.
bool stirling_floor_check(int a_max);

} // namespace lebound

#endif
