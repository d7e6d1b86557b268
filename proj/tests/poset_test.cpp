#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lebound/errors.hpp"
#include "lebound/poset.hpp"

#include "oracles.hpp"

using lebound::ElementSet;
using lebound::Poset;

namespace {

Poset chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Poset::from_covers(n, pairs);
}

Poset antichain(int n) { return Poset::from_covers(n, {}); }

} // namespace

TEST_CASE("from_covers closes transitively") {
    const Poset p = chain(3);
    CHECK(p.less(0, 1));
    CHECK(p.less(1, 2));
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
    CHECK_FALSE(p.less(0, 0));
}

TEST_CASE("from_covers rejects cycles and bad indices") {
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), lebound::CycleError);
    CHECK_THROWS_AS(Poset::from_covers(3, {{0, 1}, {1, 2}, {2, 0}}), lebound::CycleError);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 0}}), lebound::CycleError);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 2}}), lebound::RangeError);
    CHECK_THROWS_AS(Poset::from_covers(2, {{-1, 0}}), lebound::RangeError);
}

TEST_CASE("from_covers matches the Floyd-Warshall closure oracle") {
    const std::vector<std::pair<int, int>> pairs{{0, 2}, {1, 2}, {1, 3}};
    const Poset p = Poset::from_covers(4, pairs);
    const auto reach = oracles::closure_matrix(4, pairs);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(p.less(u, v) == reach[u][v]);
    CHECK(p.covers().size() == 3);
    CHECK(p.relation_pairs().size() == 3);
}

TEST_CASE("input pairs need not be covers") {
    // Redundant (0,2) must not surface as a cover.
    const Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("antichain and chain predicates") {
    const Poset c3 = chain(3);
    CHECK_FALSE(lebound::is_antichain(c3, ElementSet::of({0, 2})));
    CHECK(lebound::is_antichain(c3, ElementSet{}));
    CHECK(lebound::is_chain(c3, ElementSet::of({0, 1, 2})));

    const Poset np = oracles::n_poset();
    CHECK(lebound::is_antichain(np, ElementSet::of({0, 3})));
    CHECK(lebound::is_chain(np, ElementSet::of({1, 2})));
    CHECK_FALSE(lebound::is_chain(antichain(2), ElementSet::of({0, 1})));
}

TEST_CASE("maximal elements") {
    CHECK(lebound::maximal_elements(chain(3)) == ElementSet::of({2}));
    CHECK(lebound::maximal_elements(antichain(3)) == ElementSet::of({0, 1, 2}));
    CHECK(lebound::maximal_elements(oracles::n_poset()) == ElementSet::of({2, 3}));
}

TEST_CASE("induced subposet keeps comparabilities") {
    const Poset c3 = chain(3);
    const auto sub = lebound::induced_subposet(c3, ElementSet::of({1}));
    REQUIRE(sub.poset.size() == 2);
    CHECK(sub.poset.less(0, 1)); // 0 < 2 survives through the removed middle
    CHECK(sub.original_index == std::vector<int>{0, 2});

    const auto same = lebound::induced_subposet(c3, ElementSet{});
    CHECK(same.poset == c3);
    CHECK(same.original_index == std::vector<int>{0, 1, 2});

    const auto nsub = lebound::induced_subposet(oracles::n_poset(), ElementSet::of({2}));
    REQUIRE(nsub.poset.size() == 3);
    CHECK(nsub.poset.relation_pairs().size() == 1);
    // Kept elements 0,1,3 -> new indices 0,1,2; the surviving relation is 1<3.
    CHECK(nsub.poset.less(1, 2));
}

TEST_CASE("generate_all counts and guard") {
    CHECK(lebound::generate_all(1).size() == 1);
    CHECK(lebound::generate_all(2).size() == 2);
    CHECK(lebound::generate_all(3).size() == 7);
    CHECK_THROWS_AS(lebound::generate_all(6), lebound::SizeError);
}

TEST_CASE("generated posets satisfy the closure round trip") {
    for (int n = 1; n <= 4; ++n) {
        for (const Poset& p : lebound::generate_all(n)) {
            // covers -> closure -> covers is the identity
            const Poset rebuilt = Poset::from_covers(p.size(), p.covers());
            CHECK(rebuilt == p);
            CHECK(rebuilt.covers() == p.covers());
            CHECK(lebound::is_antichain(p, lebound::maximal_elements(p)));
            for (int u = 0; u < n; ++u) {
                CHECK_FALSE(p.less(u, u));
                for (int v = 0; v < n; ++v) {
                    if (p.less(u, v)) CHECK_FALSE(p.less(v, u));
                    for (int w = 0; w < n; ++w)
                        if (p.less(u, v) && p.less(v, w)) CHECK(p.less(u, w));
                }
            }
        }
    }
}

TEST_CASE("random poset extremes and determinism") {
    const Poset empty = lebound::random_poset(5, 0.0, 7);
    CHECK(empty.covers().empty());

    const Poset full = lebound::random_poset(5, 1.0, 7);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) CHECK(full.less(i, j));

    const Poset a = lebound::random_poset(6, 0.3, 42);
    const Poset b = lebound::random_poset(6, 0.3, 42);
    CHECK(a == b);
    CHECK_THROWS_AS(lebound::random_poset(3, 1.5, 0), lebound::ContractError);
}

TEST_CASE("subposet comparability is preserved exactly on random posets") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Poset p = lebound::random_poset(7, 0.4, seed);
        const ElementSet removed = ElementSet::of({1, 4});
        const auto sub = lebound::induced_subposet(p, removed);
        for (int i = 0; i < sub.poset.size(); ++i)
            for (int j = 0; j < sub.poset.size(); ++j)
                CHECK(sub.poset.less(i, j) ==
                      p.less(sub.original_index[i], sub.original_index[j]));
    }
}
