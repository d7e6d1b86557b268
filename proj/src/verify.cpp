#include "lebound/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lebound/bounds.hpp"
#include "lebound/errors.hpp"
#include "lebound/gkf.hpp"
#include "lebound/linext.hpp"
#include "lebound/majorize.hpp"

namespace lebound {

namespace {

constexpr std::size_t kMaxStoredFailures = 100;

struct Reporter {
    VerifySummary& summary;
    const char* check;
    int instance_index = -1;
    const Json* poset = nullptr;

    void fail(const std::string& detail) const {
        ++summary.failures_total;
        if (summary.failures.size() < kMaxStoredFailures)
            summary.failures.push_back(
                {check, instance_index, poset ? *poset : Json(nullptr), detail});
    }
    void count(const std::string& key, long long delta = 1) const {
        summary.counters[std::string(check) + "." + key] += delta;
    }
};

void check_bounds_on(const Poset& p, const Reporter& rep) {
    const BoundsReport report = check_bounds(p);
    rep.count("posets");
    if (!report.holds)
        rep.fail("bound violated: lower=" + report.lower.str() + " e=" + report.e.str() +
                 " upper=" + report.upper.str());
}

void check_gkf_oracle_on(const Poset& p, const Reporter& rep) {
    rep.count("posets");
    const Partition flow_c = chain_params(p);
    const Partition brute_c = chain_params_bruteforce(p);
    if (!(flow_c == brute_c)) {
        rep.fail("chain parameters disagree with the exhaustive oracle");
        return;
    }
    const Partition conj_a = antichain_params(p);
    const Partition brute_a = antichain_params_bruteforce(p);
    if (!(conj_a == brute_a))
        rep.fail("antichain parameters disagree with the exhaustive oracle");
}

// Deterministic antichain sample: greedy over a seeded element shuffle.
ElementSet random_antichain(const Poset& p, std::mt19937_64& rng) {
    std::vector<int> order(p.size());
    for (int i = 0; i < p.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    ElementSet anti;
    for (int x : order) {
        bool clashes = false;
        for (int y : anti.elements())
            if (p.comparable(x, y)) clashes = true;
        if (!clashes) anti.add(x);
        if (anti.count() >= 1 && (rng() & 3) == 0) break; // vary the size
    }
    return anti;
}

void check_injection_on(const Poset& p, std::uint64_t seed, const Reporter& rep) {
    rep.count("posets");
    const ElementSet a = maximal_elements(p);

    std::set<std::vector<int>> images;
    for (int x : a.elements()) {
        for (const LinearExtension& f : enumerate_extensions_minus(p, x)) {
            rep.count("domain_maps");
            const LinearExtension g = greedy_inject(p, a, x, f);
            if (!images.insert(g.ranks).second) {
                rep.fail("duplicate image under the greedy injection");
                return;
            }
            const auto back = greedy_recover(p, a, g);
            if (!back || back->first != x || !(back->second == f)) {
                rep.fail("recover after inject did not return the original pair");
                return;
            }
        }
    }

    const RecurrenceGap gap = recurrence_gap(p, a);
    if (gap.sum != gap.total) {
        rep.fail("deletion recurrence not tight at the maximal-element antichain: sum=" +
                 gap.sum.str() + " total=" + gap.total.str());
        return;
    }
    if (BigCount(static_cast<long long>(images.size())) != gap.sum) {
        rep.fail("image count disagrees with the recurrence sum");
        return;
    }

    // A couple of other antichains exercise the non-tight direction.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < 2; ++t) {
        const ElementSet anti = random_antichain(p, rng);
        const RecurrenceGap g2 = recurrence_gap(p, anti);
        if (!(anti == a)) rep.count("nonmaximal_antichains");
        if (g2.sum > g2.total)
            rep.fail("deletion recurrence exceeded the extension count at some antichain");
    }
}

void check_lemma_on(const Poset& p, const Reporter& rep) {
    rep.count("posets");
    const std::vector<int> ordering = order_maximal_antichain(p);
    if (!verify_ordering(p, ordering))
        rep.fail("ordering produced for the maximal antichain fails verification");
}

// All multisets with the given element bound and size bound, as weakly
// decreasing sequences (zero elements are redundant under padding and the
// preconditions, so positive entries suffice).
std::vector<Multiset> multiset_universe(int max_elem, int max_size) {
    std::vector<Multiset> out;
    std::vector<int> current;
    const auto rec = [&](auto&& self, int cap) -> void {
        out.emplace_back(current);
        if (static_cast<int>(current.size()) == max_size) return;
        for (int e = cap; e >= 1; --e) {
            current.push_back(e);
            self(self, e);
            current.pop_back();
        }
    };
    rec(rec, max_elem);
    return out;
}

void run_majorize_sweep(VerifySummary& summary) {
    const Reporter rep{summary, check_name(Check::majorize)};
    const std::vector<Multiset> universe = multiset_universe(5, 4);

    // Factorial Karamata, forward direction, on every majorizing pair.
    for (const Multiset& x : universe) {
        for (const Multiset& y : universe) {
            if (!majorizes(x, y)) continue;
            rep.count("karamata_pairs");
            if (!karamata_factorial_check(x, y))
                rep.fail("majorizing pair with non-dominating factorial product");
        }
    }

    // Union equivalence over all triples; the X-majorizes-Y side is hoisted
    // out of the inner loop.
    for (const Multiset& x : universe) {
        for (const Multiset& y : universe) {
            const bool bare = majorizes(x, y);
            for (const Multiset& z : universe) {
                rep.count("union_triples");
                if (majorizes(x.united(z), y.united(z)) != bare) {
                    rep.fail("adjoining a common multiset changed the majorization verdict");
                    return;
                }
            }
        }
    }

    // Exchange step: every Y satisfying the hypotheses has at most |X|
    // positive parts, each at most x_1, so the same universe is exhaustive.
    for (const Multiset& x : universe) {
        for (const Multiset& y : universe) {
            if (s(y) != s(x) - 1) continue;
            bool drift_ok = true;
            const int len = std::max(x.size(), y.size()) + 1;
            for (int k = 1; k <= len && drift_ok; ++k) {
                const long long diff = s_k(x, k) - s_k(y, k);
                if (diff < 0 || diff > 1) drift_ok = false;
            }
            if (!drift_ok) continue;
            const int divergence = first_divergence_index(x, y);
            for (int m = 1; m <= divergence; ++m) {
                rep.count("exchange_cases");
                if (!exchange_step_check(x, y, m))
                    rep.fail("exchange-step conclusion failed");
            }
        }
    }
}

void run_accuracy_sweep(VerifySummary& summary) {
    const Reporter rep{summary, check_name(Check::accuracy)};
    for (int n = 1; n <= 20; ++n) {
        for (const Partition& a : partitions_of(n)) {
            rep.count("partitions");
            if (!accuracy_check(a).holds)
                rep.fail("bound-gap floor failed at a partition of " + std::to_string(n));
            if (!power_identity_check(a))
                rep.fail("factorial power identity failed at a partition of " +
                         std::to_string(n));
        }
    }
}

bool has_check(const std::vector<Check>& checks, Check c) {
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

} // namespace

const char* check_name(Check c) {
    switch (c) {
    case Check::bounds: return "bounds";
    case Check::gkf_oracle: return "gkf-oracle";
    case Check::injection: return "injection";
    case Check::lemma: return "lemma";
    case Check::majorize: return "majorize";
    case Check::accuracy: return "accuracy";
    }
    throw InternalError("check_name: unknown check");
}

Check check_from_name(const std::string& name) {
    for (Check c : all_checks())
        if (name == check_name(c)) return c;
    throw ContractError("unknown check '" + name + "'");
}

std::vector<Check> all_checks() {
    return {Check::bounds, Check::gkf_oracle, Check::injection,
            Check::lemma,  Check::majorize,   Check::accuracy};
}

void validate_config(const VerifyConfig& config) {
    if (config.n_min < 1 || config.n_min > config.n_max)
        throw ContractError("config: need 1 <= n_min <= n_max");
    if (config.density < 0.0 || config.density > 1.0)
        throw ContractError("config: density must lie in [0,1]");

    const std::vector<Check> checks = config.checks.empty() ? all_checks() : config.checks;
    if (config.mode == VerifyConfig::Mode::exhaustive) {
        if (config.n_max > 5)
            throw ContractError("config: exhaustive mode is guarded at n <= 5");
    } else {
        if (config.count < 1) throw ContractError("config: random mode needs count >= 1");
        if (!config.seed_set) throw ContractError("config: random mode needs a seed");
    }

    const auto guard = [&](Check c, int limit, const char* what) {
        if (has_check(checks, c) && config.n_max > limit)
            throw ContractError(std::string("config: ") + check_name(c) + " is guarded at n <= " +
                                std::to_string(limit) + " (" + what + ")");
    };
    guard(Check::gkf_oracle, 8, "exhaustive cover oracle");
    guard(Check::injection, 10, "extension enumeration");
    guard(Check::bounds, 24, "extension counting");
}

VerifySummary run_verify(const VerifyConfig& config) {
    validate_config(config);
    const std::vector<Check> checks = config.checks.empty() ? all_checks() : config.checks;

    VerifySummary summary;

    const auto run_poset_checks = [&](const Poset& p, int index, std::uint64_t seed) {
        ++summary.instances;
        const Json pj = poset_to_json(p);
        for (Check c : checks) {
            Reporter rep{summary, check_name(c), index, &pj};
            try {
                switch (c) {
                case Check::bounds: check_bounds_on(p, rep); break;
                case Check::gkf_oracle: check_gkf_oracle_on(p, rep); break;
                case Check::injection: check_injection_on(p, seed, rep); break;
                case Check::lemma: check_lemma_on(p, rep); break;
                default: break; // corpus-independent checks run once, below
                }
            } catch (const std::exception& e) {
                rep.fail(std::string("exception: ") + e.what());
            }
        }
    };

    const bool needs_posets = has_check(checks, Check::bounds) ||
                              has_check(checks, Check::gkf_oracle) ||
                              has_check(checks, Check::injection) ||
                              has_check(checks, Check::lemma);
    if (needs_posets) {
        if (config.mode == VerifyConfig::Mode::exhaustive) {
            int index = 0;
            for (int n = config.n_min; n <= config.n_max; ++n)
                for (const Poset& p : generate_all(n)) run_poset_checks(p, index++, 0);
        } else {
            const int span = config.n_max - config.n_min + 1;
            for (int i = 0; i < config.count; ++i) {
                const int n = config.n_min + (i % span);
                const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
                run_poset_checks(random_poset(n, config.density, seed), i, seed);
            }
        }
    }

    if (has_check(checks, Check::majorize)) run_majorize_sweep(summary);
    if (has_check(checks, Check::accuracy)) run_accuracy_sweep(summary);
    return summary;
}

Json verify_config_to_json(const VerifyConfig& config) {
    Json doc;
    doc["mode"] = config.mode == VerifyConfig::Mode::exhaustive ? "exhaustive" : "random";
    doc["n_min"] = config.n_min;
    doc["n_max"] = config.n_max;
    if (config.mode == VerifyConfig::Mode::random) {
        doc["count"] = config.count;
        doc["density"] = round_12sig(config.density);
        doc["seed"] = config.seed;
    }
    Json checks = Json::array();
    for (Check c : config.checks.empty() ? all_checks() : config.checks)
        checks.push_back(check_name(c));
    doc["checks"] = std::move(checks);
    return doc;
}

Json verify_summary_to_json(const VerifyConfig& config, const VerifySummary& summary) {
    Json doc;
    doc["config"] = verify_config_to_json(config);
    doc["instances"] = summary.instances;
    Json counters = Json::object();
    for (const auto& [key, value] : summary.counters) counters[key] = value;
    doc["counters"] = std::move(counters);
    Json failures = Json::array();
    for (const VerifyFailure& f : summary.failures) {
        Json entry;
        entry["check"] = f.check;
        entry["instance_index"] = f.instance_index;
        entry["poset"] = f.poset;
        entry["detail"] = f.detail;
        failures.push_back(std::move(entry));
    }
    doc["failures"] = std::move(failures);
    doc["failures_total"] = summary.failures_total;
    return doc;
}

} // namespace lebound
