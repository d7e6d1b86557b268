#include "lebound/partition.hpp"

#include <algorithm>

#include "lebound/errors.hpp"

namespace lebound {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw ContractError("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ContractError("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int part : parts_) n_ += part;
}

long long Partition::prefix_sum(int k) const {
    long long s = 0;
    for (int i = 0; i < k && i < size(); ++i) s += parts_[i];
    return s;
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    if (!p.parts().empty()) {
        out.resize(p.parts()[0]);
        for (int k = 1; k <= p.parts()[0]; ++k)
            out[k - 1] = static_cast<int>(std::count_if(
                p.parts().begin(), p.parts().end(), [k](int part) { return part >= k; }));
    }
    return Partition(std::move(out));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw ContractError("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> current;
    const auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace lebound
