#include "lebound/bigint.hpp"

#include <cmath>

#include "lebound/errors.hpp"

namespace lebound {

BigCount factorial(int n) {
    if (n < 0) throw ContractError("factorial: negative argument");
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double log_big(const BigCount& v) {
    if (v <= 0) throw ContractError("log_big: argument must be positive");
    const auto bits = boost::multiprecision::msb(v); // floor(log2 v)
    if (bits <= 900) {
        return std::log(v.convert_to<double>());
    }
    // Keep 64 high bits of mantissa, account for the shifted-out bits.
    const unsigned shift = static_cast<unsigned>(bits) - 63;
    const double mant = BigCount(v >> shift).convert_to<double>();
    return std::log(mant) + static_cast<double>(shift) * std::log(2.0);
}

} // namespace lebound
