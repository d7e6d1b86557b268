#ifndef LEBOUND_VERIFY_HPP
#define LEBOUND_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lebound/io.hpp"

namespace lebound {

enum class Check {
    bounds,     // lower <= e(P) <= upper, exact integers
    gkf_oracle, // flow parameters equal the exhaustive-cover oracles
    injection,  // greedy injection: distinct images, round trip, recurrence
    lemma,      // maximal-antichain ordering exists and verifies
    majorize,   // factorial Karamata, union equivalence, exchange step
    accuracy,   // bound-gap floor and factorial power identity, all n <= 20
};

const char* check_name(Check c);
Check check_from_name(const std::string& name);
std::vector<Check> all_checks();

struct VerifyConfig {
    enum class Mode { exhaustive, random };

    Mode mode = Mode::exhaustive;
    int n_min = 1;
    int n_max = 5;
    int count = 0;          // random mode: number of instances
    double density = 0.3;   // random mode: edge probability
    std::uint64_t seed = 0; // random mode: per-instance seeds are seed + index
    bool seed_set = false;
    std::vector<Check> checks; // empty means every check
};

// Throws ContractError on invalid combinations (exhaustive beyond n = 5,
// missing seed/count in random mode, a check guard exceeded by n_max, ...).
void validate_config(const VerifyConfig& config);

struct VerifyFailure {
    std::string check;
    int instance_index = -1; // -1 for corpus-independent sweeps
    Json poset;              // null for corpus-independent sweeps
    std::string detail;
};

struct VerifySummary {
    long long instances = 0;
    std::map<std::string, long long> counters; // cases exercised, per check
    std::vector<VerifyFailure> failures;       // capped; see failures_total
    long long failures_total = 0;
};

// Runs the selected checks over the configured instance stream. Output is a
// pure function of the config; nothing time- or host-dependent is recorded.
VerifySummary run_verify(const VerifyConfig& config);

Json verify_config_to_json(const VerifyConfig& config);
Json verify_summary_to_json(const VerifyConfig& config, const VerifySummary& summary);

} // namespace lebound

#endif
