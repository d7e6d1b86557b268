#ifndef LEBOUND_PARTITION_HPP
#define LEBOUND_PARTITION_HPP

#include <vector>

namespace lebound {

// Weakly decreasing positive parts. Zero-padded input is accepted and
// normalized by dropping the trailing zeros.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(parts_.size()); }

    // parts[0] + ... + parts[k-1], saturating past the last part.
    long long prefix_sum(int k) const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Young-diagram transpose: part k of the result counts parts >= k. Involutive.
Partition conjugate(const Partition& p);

// Every partition of n, in lexicographically decreasing part order.
std::vector<Partition> partitions_of(int n);

} // namespace lebound

#endif
