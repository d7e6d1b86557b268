#include "lebound/gkf.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>

#include "lebound/errors.hpp"

namespace lebound {

namespace {

// Unit-capacity min-cost flow with twin residual arcs. Costs are 0 except
// for the node-split arcs (-1 per covered element), so every shortest
// augmenting path maximizes newly covered elements.
class UnitFlowNetwork {
public:
    explicit UnitFlowNetwork(int node_count)
        : head_(node_count), potential_(node_count), dist_(node_count), via_(node_count) {}

    void add_arc(int from, int to, int cost) {
        head_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, 1, cost});
        head_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0, -cost});
    }

    // One augmentation of value 1 along a minimum-cost source->sink path.
    // Returns the (actual, un-reduced) path cost, or nullopt when the sink
    // is unreachable in the residual graph.
    std::optional<long long> augment(int source, int sink) {
        dijkstra(source);
        if (dist_[sink] == kInf) return std::nullopt;
        for (std::size_t v = 0; v < dist_.size(); ++v)
            if (dist_[v] < kInf) potential_[v] += dist_[v];
        const long long cost = potential_[sink] - potential_[source];
        for (int v = sink; v != source;) {
            Arc& fwd = arcs_[via_[v]];
            Arc& bwd = arcs_[via_[v] ^ 1];
            fwd.cap -= 1;
            bwd.cap += 1;
            v = bwd.to;
        }
        return cost;
    }

    // Bellman-Ford once to seed the potentials (the -1 arcs make the initial
    // graph carry negative costs; it is acyclic, so this terminates).
    void init_potentials(int source) {
        std::fill(potential_.begin(), potential_.end(), kInf);
        potential_[source] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < head_.size(); ++v) {
                if (potential_[v] == kInf) continue;
                for (int id : head_[v]) {
                    const Arc& arc = arcs_[id];
                    if (arc.cap > 0 && potential_[v] + arc.cost < potential_[arc.to]) {
                        potential_[arc.to] = potential_[v] + arc.cost;
                        changed = true;
                    }
                }
            }
        }
        std::replace(potential_.begin(), potential_.end(), kInf, 0ll);
    }

private:
    struct Arc {
        int to;
        int cap;
        int cost;
    };

    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    void dijkstra(int source) {
        std::fill(dist_.begin(), dist_.end(), kInf);
        dist_[source] = 0;
        using Item = std::pair<long long, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.push({0, source});
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d > dist_[v]) continue;
            for (int id : head_[v]) {
                const Arc& arc = arcs_[id];
                if (arc.cap <= 0) continue;
                const long long nd = d + arc.cost + potential_[v] - potential_[arc.to];
                if (nd < dist_[arc.to]) {
                    dist_[arc.to] = nd;
                    via_[arc.to] = id;
                    heap.push({nd, arc.to});
                }
            }
        }
    }

    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
    std::vector<long long> potential_;
    std::vector<long long> dist_;
    std::vector<int> via_; // arc used to reach each node on the shortest path
};

// Best-coverage increments over families of the given blocks (bitmasks),
// by breadth-first closure of reachable covered-sets. Only inclusion-maximal
// blocks matter for coverage, so the rest are dropped up front.
std::vector<int> coverage_increments(int n, std::vector<std::uint32_t> blocks) {
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t b : blocks) {
        bool dominated = false;
        for (std::uint32_t o : blocks)
            if (o != b && (b & o) == b && (o & ~b)) dominated = true;
        if (!dominated && b != 0) maximal.push_back(b);
    }

    std::vector<char> reachable(1u << n, 0);
    reachable[0] = 1;
    std::vector<std::uint32_t> frontier{0};

    std::vector<int> increments;
    int covered_so_far = 0;
    while (covered_so_far < n) {
        std::vector<std::uint32_t> next;
        int best = covered_so_far;
        for (std::uint32_t m : frontier) {
            for (std::uint32_t b : maximal) {
                const std::uint32_t u = m | b;
                if (!reachable[u]) {
                    reachable[u] = 1;
                    next.push_back(u);
                    best = std::max(best, std::popcount(u));
                }
            }
        }
        if (next.empty()) throw InternalError("coverage_increments: coverage stalled");
        increments.push_back(best - covered_so_far);
        covered_so_far = best;
        // Keep every reachable mask in the frontier: a sub-optimal mask at
        // step k can still lead past the greedy one later.
        frontier.insert(frontier.end(), next.begin(), next.end());
    }
    return increments;
}

// Prefix condition of the maximal-antichain ordering at step i (1-based):
// the chains realizing c_1 + ... + c_i must avoid the still-forbidden part
// of A. Every member of A is maximal in P, so a chain avoids a forbidden
// element iff it avoids it as its top; removing the forbidden elements
// entirely is therefore equivalent.
bool prefix_condition(const Poset& p, const Partition& full_params, ElementSet forbidden, int i) {
    const auto sub = induced_subposet(p, forbidden);
    const Partition reduced = chain_params(sub.poset);
    return reduced.prefix_sum(i) == full_params.prefix_sum(i);
}

} // namespace

Partition chain_params(const Poset& p) {
    const int n = p.size();
    if (n == 0) return Partition{};

    // source = 2n, sink = 2n+1, v_in = v, v_out = n+v.
    UnitFlowNetwork net(2 * n + 2);
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    for (int v = 0; v < n; ++v) {
        net.add_arc(source, v, 0);
        net.add_arc(v, n + v, -1);
        net.add_arc(n + v, sink, 0);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (p.less(u, v)) net.add_arc(n + u, v, 0);

    net.init_potentials(source);

    std::vector<int> parts;
    long long covered = 0;
    while (covered < n) {
        const auto cost = net.augment(source, sink);
        if (!cost) throw InternalError("chain_params: sink unreachable before full coverage");
        const long long gain = -*cost;
        if (gain < 0) throw InternalError("chain_params: negative augmentation gain");
        if (gain == 0) break; // only zero gains can follow; drop them
        if (!parts.empty() && gain > parts.back())
            throw InternalError("chain_params: augmentation gains are not weakly decreasing");
        parts.push_back(static_cast<int>(gain));
        covered += gain;
    }
    if (covered != n) throw InternalError("chain_params: gains do not sum to n");
    return Partition(std::move(parts));
}

Partition antichain_params(const Poset& p) { return conjugate(chain_params(p)); }

Partition chain_params_bruteforce(const Poset& p) {
    const int n = p.size();
    if (n > 8) throw SizeError("chain_params_bruteforce: guarded at n <= 8");
    if (n == 0) return Partition{};
    std::vector<std::uint32_t> blocks;
    for (std::uint32_t m = 1; m < (1u << n); ++m)
        if (is_chain(p, ElementSet(m))) blocks.push_back(m);
    return Partition(coverage_increments(n, std::move(blocks)));
}

Partition antichain_params_bruteforce(const Poset& p) {
    const int n = p.size();
    if (n > 8) throw SizeError("antichain_params_bruteforce: guarded at n <= 8");
    if (n == 0) return Partition{};
    std::vector<std::uint32_t> blocks;
    for (std::uint32_t m = 1; m < (1u << n); ++m)
        if (is_antichain(p, ElementSet(m))) blocks.push_back(m);
    return Partition(coverage_increments(n, std::move(blocks)));
}

std::vector<int> order_maximal_antichain(const Poset& p) {
    const Partition full = chain_params(p);
    const ElementSet all_maximal = maximal_elements(p);
    std::vector<int> remaining = all_maximal.elements();
    std::vector<int> ordering;
    ElementSet chosen;

    while (!remaining.empty()) {
        const int i = static_cast<int>(ordering.size()) + 1;
        int picked = -1;
        for (int x : remaining) { // ascending index keeps the output deterministic
            ElementSet trial = chosen;
            trial.add(x);
            if (prefix_condition(p, full, all_maximal - trial, i)) {
                picked = x;
                break;
            }
        }
        if (picked == -1)
            throw InternalError("order_maximal_antichain: no admissible candidate at step " +
                                std::to_string(i));
        ordering.push_back(picked);
        chosen.add(picked);
        remaining.erase(std::find(remaining.begin(), remaining.end(), picked));
    }
    return ordering;
}

bool verify_ordering(const Poset& p, const std::vector<int>& ordering) {
    const ElementSet all_maximal = maximal_elements(p);
    ElementSet seen;
    for (int x : ordering) {
        if (x < 0 || x >= p.size() || !all_maximal.has(x) || seen.has(x))
            throw ContractError("verify_ordering: not a permutation of the maximal elements");
        seen.add(x);
    }
    if (!(seen == all_maximal))
        throw ContractError("verify_ordering: not a permutation of the maximal elements");

    const Partition full = chain_params(p);
    ElementSet prefix;
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        prefix.add(ordering[i]);
        if (!prefix_condition(p, full, all_maximal - prefix, static_cast<int>(i) + 1))
            return false;
    }
    return true;
}

} // namespace lebound
