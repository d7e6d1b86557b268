#include "lebound/poset.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

#include "lebound/errors.hpp"

namespace lebound {

namespace {

void require_subset(const Poset& p, ElementSet s, const char* op) {
    if (p.size() < 64 && (s.bits & ~ElementSet::full(p.size()).bits))
        throw RangeError(std::string(op) + ": set contains elements outside the poset");
}

void require_mask_width(const Poset& p, const char* op) {
    if (p.size() > 64)
        throw SizeError(std::string(op) + ": bitmask operations support n <= 64");
}

} // namespace

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw RangeError("from_covers: negative element count");
    Poset p;
    p.n_ = n;
    p.less_.assign(static_cast<std::size_t>(n) * n, 0);

    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw RangeError("from_covers: pair index outside 0..n-1");
        if (u == v)
            throw CycleError("from_covers: relation relates an element to itself");
        adj[u].push_back(v);
    }

    // Reachability by DFS from each node; u reaching itself means a cycle.
    std::vector<int> stack;
    for (int u = 0; u < n; ++u) {
        auto row = p.less_.begin() + static_cast<std::size_t>(u) * n;
        stack.assign(adj[u].begin(), adj[u].end());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (row[v]) continue;
            row[v] = 1;
            for (int w : adj[v]) stack.push_back(w);
        }
        if (row[u]) throw CycleError("from_covers: input relation contains a cycle");
    }

    // Transitive reduction: (u,v) is a cover iff nothing sits strictly between.
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (!p.less(u, v)) continue;
            bool direct = true;
            for (int w = 0; w < n && direct; ++w)
                if (p.less(u, w) && p.less(w, v)) direct = false;
            if (direct) p.covers_.emplace_back(u, v);
        }
    }
    std::sort(p.covers_.begin(), p.covers_.end());
    return p;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (less(u, v)) out.emplace_back(u, v);
    return out;
}

ElementSet Poset::below(int v) const {
    ElementSet s;
    for (int u = 0; u < n_; ++u)
        if (less(u, v)) s.add(u);
    return s;
}

ElementSet Poset::above(int v) const {
    ElementSet s;
    for (int u = 0; u < n_; ++u)
        if (less(v, u)) s.add(u);
    return s;
}

bool is_antichain(const Poset& p, ElementSet s) {
    require_subset(p, s, "is_antichain");
    const auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (p.comparable(elems[i], elems[j])) return false;
    return true;
}

bool is_chain(const Poset& p, ElementSet s) {
    require_subset(p, s, "is_chain");
    const auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!p.comparable(elems[i], elems[j])) return false;
    return true;
}

ElementSet maximal_elements(const Poset& p) {
    require_mask_width(p, "maximal_elements");
    ElementSet s;
    for (int x = 0; x < p.size(); ++x) {
        bool maximal = true;
        for (int y = 0; y < p.size() && maximal; ++y)
            if (p.less(x, y)) maximal = false;
        if (maximal) s.add(x);
    }
    return s;
}

SubposetResult induced_subposet(const Poset& p, ElementSet removed) {
    require_subset(p, removed, "induced_subposet");
    SubposetResult res;
    for (int x = 0; x < p.size(); ++x)
        if (!removed.has(x)) res.original_index.push_back(x);

    const int m = static_cast<int>(res.original_index.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (p.less(res.original_index[i], res.original_index[j]))
                pairs.emplace_back(i, j);
    res.poset = Poset::from_covers(m, pairs);
    return res;
}

std::vector<Poset> generate_all(int n) {
    if (n > 5) throw SizeError("generate_all: guarded at n <= 5");
    if (n < 0) throw RangeError("generate_all: negative element count");

    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    std::vector<Poset> out;
    std::unordered_set<std::string> seen;
    std::vector<std::pair<int, int>> pairs;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        pairs.clear();
        for (std::size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1ull) pairs.push_back(slots[b]);
        Poset p = Poset::from_covers(n, pairs);
        std::string key;
        key.reserve(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) key.push_back(p.less(u, v) ? '1' : '0');
        if (seen.insert(key).second) out.push_back(std::move(p));
    }
    return out;
}

Poset random_poset(int n, double density, std::uint64_t seed) {
    if (n < 0) throw RangeError("random_poset: negative element count");
    if (density < 0.0 || density > 1.0)
        throw ContractError("random_poset: density must lie in [0,1]");

    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // 53-bit uniform draw in [0,1); avoids distribution objects so the
            // stream is pinned by the engine alone.
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < density) pairs.emplace_back(i, j);
        }
    }
    return Poset::from_covers(n, pairs);
}

} // namespace lebound
