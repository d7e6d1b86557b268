#include "lebound/bounds.hpp"

#include <cmath>

#include "lebound/errors.hpp"
#include "lebound/gkf.hpp"
#include "lebound/linext.hpp"

namespace lebound {

namespace {

constexpr double kLogTolerance = 1e-9;

double log_rational(const BigRational& r) {
    return log_big(boost::multiprecision::numerator(r)) -
           log_big(boost::multiprecision::denominator(r));
}

} // namespace

BigCount lower_bound(const Partition& a) {
    BigCount prod = 1;
    for (int part : a.parts()) prod *= factorial(part);
    return prod;
}

BigCount upper_bound(int n, const Partition& c) {
    if (c.n() != n) throw ContractError("upper_bound: parts do not sum to n");
    BigCount denom = 1;
    for (int part : c.parts()) denom *= factorial(part);
    BigCount quotient;
    BigCount remainder;
    boost::multiprecision::divide_qr(factorial(n), denom, quotient, remainder);
    if (remainder != 0)
        throw InternalError("upper_bound: multinomial division left a remainder");
    return quotient;
}

BoundsReport check_bounds(const Poset& p) {
    BoundsReport report;
    report.n = p.size();
    report.c = chain_params(p);
    report.a = conjugate(report.c);
    report.lower = lower_bound(report.a);
    report.upper = upper_bound(report.n, report.c);
    report.e = count_extensions(p);
    report.holds = report.lower <= report.e && report.e <= report.upper;
    report.log_ratio = log_big(report.upper) - log_big(report.lower);
    return report;
}

BigCount antichain_partition_bound(const Poset& p, const std::vector<ElementSet>& blocks) {
    ElementSet covered;
    for (const ElementSet& block : blocks) {
        if (!is_antichain(p, block))
            throw ContractError("antichain_partition_bound: block is not an antichain");
        if (!(covered & block).empty())
            throw ContractError("antichain_partition_bound: blocks overlap");
        covered = covered | block;
    }
    if (!(covered == ElementSet::full(p.size())))
        throw ContractError("antichain_partition_bound: blocks do not cover the poset");

    BigCount prod = 1;
    for (const ElementSet& block : blocks) prod *= factorial(block.count());
    return prod;
}

BigRational harmonic(int n) {
    if (n < 1) throw ContractError("harmonic: n must be at least 1");
    BigRational h = 0;
    for (int k = 1; k <= n; ++k) h += BigRational(1, k);
    return h;
}

AccuracyResult accuracy_check(const Partition& a) {
    AccuracyResult res;
    const Partition c = conjugate(a);
    for (int part : a.parts()) res.lhs_log += std::lgamma(part + 1.0);
    for (int part : c.parts()) res.lhs_log += std::lgamma(part + 1.0);

    const int n = a.n();
    if (n == 0) {
        // Empty partition: both sides are empty products / vacuous.
        res.holds = true;
        return res;
    }
    res.rhs_log = n * (std::log(static_cast<double>(n)) - 1.0 - log_rational(harmonic(n)));
    res.holds = res.lhs_log >= res.rhs_log - kLogTolerance;
    return res;
}

bool power_identity_check(const Partition& a) {
    const Partition c = conjugate(a);
    BigCount lhs = 1;
    for (int part : c.parts()) lhs *= factorial(part);
    BigCount rhs = 1;
    for (int k = 1; k <= a.size(); ++k)
        rhs *= boost::multiprecision::pow(BigCount(k), static_cast<unsigned>(a.parts()[k - 1]));
    return lhs == rhs;
}

bool stirling_floor_check(int a_max) {
    if (a_max < 0) throw ContractError("stirling_floor_check: negative bound");
    for (int a = 0; a <= a_max; ++a) {
        const double lhs = std::lgamma(a + 1.0);
        const double rhs = a * (std::log(a + 1.0) - 1.0);
        if (lhs < rhs - kLogTolerance) return false;
    }
    return true;
}

} // namespace lebound
