#ifndef LEBOUND_GKF_HPP
#define LEBOUND_GKF_HPP

#include <vector>

#include "lebound/partition.hpp"
#include "lebound/poset.hpp"

namespace lebound {

// Chain parameters c_1 >= c_2 >= ...: c_1 + ... + c_k is the maximum number
// of elements coverable by k chains. Computed by successive shortest-path
// min-cost flow on the node-split network; the k-th augmentation's negated
// cost is c_k.
Partition chain_params(const Poset& p);

// Antichain parameters a_1 >= a_2 >= ...: a_1 + ... + a_k is the maximum
// number of elements coverable by k antichains. Equal to the conjugate of
// chain_params by chain/antichain duality.
Partition antichain_params(const Poset& p);

// Exhaustive oracles: maximize coverage over families of chains (resp.
// antichains) directly. Guarded at n <= 8.
Partition chain_params_bruteforce(const Poset& p);
Partition antichain_params_bruteforce(const Poset& p);

// Orders the antichain A of maximal elements as x_1, ..., x_{|A|} so that for
// every i some i chains avoiding A \ {x_1..x_i} cover c_1 + ... + c_i
// elements. A candidate always exists; failure to find one throws
// InternalError rather than returning a wrong order.
std::vector<int> order_maximal_antichain(const Poset& p);

// Checks the prefix condition above for a given ordering of the maximal
// elements. Throws ContractError if `ordering` is not a permutation of them.
bool verify_ordering(const Poset& p, const std::vector<int>& ordering);

} // namespace lebound

#endif
