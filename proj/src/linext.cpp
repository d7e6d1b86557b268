#include "lebound/linext.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "lebound/errors.hpp"

namespace lebound {

namespace {

constexpr int kCountGuard = 24;
constexpr int kEnumGuard = 10;

// Ambient-indexed predecessor masks, n <= 64 assumed by callers' guards.
std::vector<std::uint64_t> pred_masks(const Poset& p) {
    std::vector<std::uint64_t> pred(p.size(), 0);
    for (int v = 0; v < p.size(); ++v)
        for (int u = 0; u < p.size(); ++u)
            if (p.less(u, v)) pred[v] |= 1ull << u;
    return pred;
}

std::vector<std::uint64_t> succ_masks(const Poset& p) {
    std::vector<std::uint64_t> succ(p.size(), 0);
    for (int v = 0; v < p.size(); ++v)
        for (int u = 0; u < p.size(); ++u)
            if (p.less(v, u)) succ[v] |= 1ull << u;
    return succ;
}

void require_valid(const Poset& p, const LinearExtension& g, const char* op) {
    if (!is_valid_extension(p, g))
        throw ContractError(std::string(op) + ": not a valid linear extension");
}

void require_antichain_member(const Poset& p, ElementSet a, int x, const char* op) {
    if (!is_antichain(p, a)) throw ContractError(std::string(op) + ": A is not an antichain");
    if (x < 0 || x >= p.size() || !a.has(x))
        throw ContractError(std::string(op) + ": x does not belong to A");
}

} // namespace

bool is_valid_extension(const Poset& p, const LinearExtension& ext) {
    const int n = p.size();
    if (static_cast<int>(ext.ranks.size()) != n) return false;
    std::vector<char> used(n + 1, 0);
    for (int r : ext.ranks) {
        if (r < 1 || r > n || used[r]) return false;
        used[r] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (p.less(u, v) && ext.ranks[u] >= ext.ranks[v]) return false;
    return true;
}

bool is_valid_extension_minus(const Poset& p, int x, const LinearExtension& ext) {
    const int n = p.size();
    if (x < 0 || x >= n || static_cast<int>(ext.ranks.size()) != n) return false;
    if (ext.ranks[x] != 0) return false;
    std::vector<char> used(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        if (v == x) continue;
        const int r = ext.ranks[v];
        if (r < 2 || r > n || used[r]) return false;
        used[r] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != x && v != x && p.less(u, v) && ext.ranks[u] >= ext.ranks[v]) return false;
    return true;
}

BigCount count_extensions(const Poset& p) {
    const int n = p.size();
    if (n > kCountGuard) throw SizeError("count_extensions: guarded at n <= 24");
    if (n == 0) return 1;

    const auto succ = succ_masks(p);

    std::unordered_map<std::uint32_t, BigCount> memo;
    memo.reserve(1024);

    // e(D) for downset D; the full set is a downset and removing a maximal
    // element keeps the downset property, so the recursion stays inside the
    // downset lattice.
    const std::function<const BigCount&(std::uint32_t)> count =
        [&](std::uint32_t downset) -> const BigCount& {
        auto it = memo.find(downset);
        if (it != memo.end()) return it->second;
        BigCount total = 0;
        if (downset == 0) {
            total = 1;
        } else {
            for (std::uint32_t rest = downset; rest; rest &= rest - 1) {
                const int x = std::countr_zero(rest);
                if ((succ[x] & downset) == 0) total += count(downset ^ (1u << x));
            }
        }
        return memo.emplace(downset, std::move(total)).first->second;
    };

    return count((1u << n) - 1);
}

void for_each_extension(const Poset& p, const std::function<void(const LinearExtension&)>& fn) {
    const int n = p.size();
    if (n > kEnumGuard) throw SizeError("for_each_extension: guarded at n <= 10");

    const auto pred = pred_masks(p);
    LinearExtension ext;
    ext.ranks.assign(n, 0);
    std::uint64_t placed = 0;

    // Smallest eligible element first at every rank gives lexicographic
    // order of the element sequences.
    const std::function<void(int)> rec = [&](int rank) {
        if (rank > n) {
            fn(ext);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if ((placed >> x) & 1ull) continue;
            if ((pred[x] & ~placed) != 0) continue;
            placed |= 1ull << x;
            ext.ranks[x] = rank;
            rec(rank + 1);
            ext.ranks[x] = 0;
            placed &= ~(1ull << x);
        }
    };
    rec(1);
}

std::vector<LinearExtension> enumerate_extensions(const Poset& p) {
    std::vector<LinearExtension> out;
    for_each_extension(p, [&](const LinearExtension& ext) { out.push_back(ext); });
    return out;
}

std::vector<LinearExtension> enumerate_extensions_minus(const Poset& p, int x) {
    if (x < 0 || x >= p.size()) throw RangeError("enumerate_extensions_minus: x out of range");
    const auto sub = induced_subposet(p, ElementSet::single(x));
    std::vector<LinearExtension> out;
    for_each_extension(sub.poset, [&](const LinearExtension& se) {
        LinearExtension f;
        f.ranks.assign(p.size(), 0);
        for (int i = 0; i < sub.poset.size(); ++i)
            f.ranks[sub.original_index[i]] = se.ranks[i] + 1; // shift into {2..n}
        out.push_back(std::move(f));
    });
    return out;
}

std::vector<int> greedy_falling_chain(const Poset& p, int x, const LinearExtension& f) {
    std::vector<int> chain{x};
    int cur = x;
    for (;;) {
        int next = -1;
        for (int y = 0; y < p.size(); ++y) {
            if (!p.less(y, cur)) continue;
            if (next == -1 || f.ranks[y] > f.ranks[next]) next = y;
        }
        if (next == -1) break;
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

std::vector<int> greedy_increasing_chain(const Poset& p, const LinearExtension& g) {
    int cur = -1;
    for (int v = 0; v < p.size(); ++v)
        if (g.ranks[v] == 1) cur = v;
    if (cur == -1) throw ContractError("greedy_increasing_chain: no element of rank 1");
    std::vector<int> chain{cur};
    for (;;) {
        int next = -1;
        for (int z = 0; z < p.size(); ++z) {
            if (!p.less(cur, z)) continue;
            if (next == -1 || g.ranks[z] < g.ranks[next]) next = z;
        }
        if (next == -1) break;
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

LinearExtension greedy_inject(const Poset& p, ElementSet a, int x, const LinearExtension& f) {
    require_antichain_member(p, a, x, "greedy_inject");
    if (!is_valid_extension_minus(p, x, f))
        throw ContractError("greedy_inject: f is not a valid extension of P-x");

    const auto chain = greedy_falling_chain(p, x, f); // x = chain[0] > ... > chain[t]
    LinearExtension g = f;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) g.ranks[chain[i]] = f.ranks[chain[i + 1]];
    g.ranks[chain.back()] = 1;

    if (!is_valid_extension(p, g))
        throw InternalError("greedy_inject: shifted map is not order-preserving");
    return g;
}

std::optional<std::pair<int, LinearExtension>> greedy_recover(const Poset& p, ElementSet a,
                                                              const LinearExtension& g) {
    if (!is_antichain(p, a)) throw ContractError("greedy_recover: A is not an antichain");
    require_valid(p, g, "greedy_recover");

    const auto chain = greedy_increasing_chain(p, g);
    int x = -1;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < chain.size(); ++j) {
        if (a.has(chain[j])) {
            if (x != -1) throw InternalError("greedy_recover: chain meets the antichain twice");
            x = chain[j];
            pos = j;
        }
    }
    if (x == -1) return std::nullopt;

    // Undo the value shift along the chain prefix ending at x.
    LinearExtension f = g;
    for (std::size_t j = 0; j < pos; ++j) f.ranks[chain[j]] = g.ranks[chain[j + 1]];
    f.ranks[x] = 0;

    if (!is_valid_extension_minus(p, x, f))
        throw InternalError("greedy_recover: recovered map is not an extension of P-x");
    return std::make_pair(x, std::move(f));
}

RecurrenceGap recurrence_gap(const Poset& p, ElementSet a) {
    if (!is_antichain(p, a)) throw ContractError("recurrence_gap: A is not an antichain");
    RecurrenceGap gap{0, count_extensions(p)};
    for (int x : a.elements())
        gap.sum += count_extensions(induced_subposet(p, ElementSet::single(x)).poset);
    return gap;
}

} // namespace lebound
