#ifndef LEBOUND_BIGINT_HPP
#define LEBOUND_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace lebound {

// Exact unsigned counts (extension counts, factorial products). Signed
// storage, non-negative by construction everywhere it is produced.
using BigCount = boost::multiprecision::cpp_int;

// Exact rationals (harmonic numbers).
using BigRational = boost::multiprecision::cpp_rational;

BigCount factorial(int n);

// Natural log of a positive big integer, safe far beyond double range.
double log_big(const BigCount& v);

} // namespace lebound

#endif
