#include "lebound/majorize.hpp"

#include <algorithm>

#include "lebound/errors.hpp"

namespace lebound {

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
    for (int e : v)
        if (e < 0) throw ContractError("Multiset: negative element");
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

} // namespace

Multiset::Multiset(std::initializer_list<int> elems)
    : elems_(sorted_desc(std::vector<int>(elems))) {}
Multiset::Multiset(std::vector<int> elems) : elems_(sorted_desc(std::move(elems))) {}

int Multiset::nth(int i) const {
    if (i < 1) throw RangeError("Multiset::nth: index is 1-based");
    return i <= size() ? elems_[i - 1] : 0;
}

Multiset Multiset::united(const Multiset& other) const {
    std::vector<int> merged;
    merged.reserve(elems_.size() + other.elems_.size());
    std::merge(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
               std::back_inserter(merged), std::greater<>());
    Multiset out;
    out.elems_ = std::move(merged);
    return out;
}

bool Multiset::operator==(const Multiset& other) const {
    const int len = std::max(size(), other.size());
    for (int i = 1; i <= len; ++i)
        if (nth(i) != other.nth(i)) return false;
    return true;
}

long long s_k(const Multiset& x, int k) {
    if (k < 0) throw RangeError("s_k: k must be non-negative");
    long long total = 0;
    for (int i = 0; i < k && i < x.size(); ++i) total += x.elems()[i];
    return total;
}

long long s(const Multiset& x) { return s_k(x, x.size()); }

bool majorizes(const Multiset& x, const Multiset& y) {
    if (s(x) != s(y)) return false;
    const int len = std::max(x.size(), y.size());
    long long px = 0;
    long long py = 0;
    for (int i = 1; i <= len; ++i) {
        px += x.nth(i);
        py += y.nth(i);
        if (px < py) return false;
    }
    return true;
}

BigCount factorial_product(const Multiset& x) {
    BigCount prod = 1;
    for (int e : x.elems()) prod *= factorial(e);
    return prod;
}

bool karamata_factorial_check(const Multiset& x, const Multiset& y) {
    if (!majorizes(x, y))
        throw ContractError("karamata_factorial_check: X does not majorize Y");
    return factorial_product(x) >= factorial_product(y);
}

bool union_equivalence(const Multiset& x, const Multiset& y, const Multiset& z) {
    return majorizes(x, y) == majorizes(x.united(z), y.united(z));
}

Multiset decrement_exchange(const Multiset& x, int m) {
    if (m < 1 || m > x.size()) throw RangeError("decrement_exchange: m out of range");
    if (x.nth(m) == 0) throw ContractError("decrement_exchange: x_m is zero");
    std::vector<int> elems = x.elems();
    elems[m - 1] -= 1;
    return Multiset(std::move(elems));
}

bool exchange_step_check(const Multiset& x, const Multiset& y, int m) {
    if (m < 1) throw RangeError("exchange_step_check: m is 1-based");
    if (s(y) != s(x) - 1)
        throw ContractError("exchange_step_check: s(Y) must equal s(X) - 1");
    const int len = std::max(x.size(), y.size()) + 1;
    long long px = 0;
    long long py = 0;
    for (int k = 1; k <= len; ++k) {
        px += x.nth(k);
        py += y.nth(k);
        const long long diff = px - py;
        if (diff < 0 || diff > 1)
            throw ContractError("exchange_step_check: prefix sums drift beyond one");
        if (k < m && diff != 0)
            throw ContractError("exchange_step_check: prefixes below m must agree");
    }

    // x_m > 0 is part of the conclusion; report rather than throw when the
    // claim itself would fail.
    if (x.nth(m) == 0) return false;
    return majorizes(y, decrement_exchange(x, m));
}

int first_divergence_index(const Multiset& x, const Multiset& y) {
    const int len = std::max(x.size(), y.size()) + 1;
    long long px = 0;
    long long py = 0;
    for (int k = 1; k <= len; ++k) {
        px += x.nth(k);
        py += y.nth(k);
        if (px != py) return k;
    }
    throw ContractError("first_divergence_index: prefix sums never diverge");
}

} // namespace lebound
