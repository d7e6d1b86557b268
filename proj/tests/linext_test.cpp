#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lebound/errors.hpp"
#include "lebound/linext.hpp"

#include "oracles.hpp"

using lebound::BigCount;
using lebound::ElementSet;
using lebound::LinearExtension;
using lebound::Poset;

namespace {

Poset chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Poset::from_covers(n, pairs);
}

Poset antichain(int n) { return Poset::from_covers(n, {}); }

} // namespace

TEST_CASE("count_extensions on chains, antichains and the N poset") {
    CHECK(lebound::count_extensions(chain(1)) == 1);
    CHECK(lebound::count_extensions(chain(6)) == 1);
    CHECK(lebound::count_extensions(antichain(4)) == 24);
    CHECK(lebound::count_extensions(antichain(0)) == 1);
    // Permutation-filter oracle gives 5 for the N poset.
    const Poset np = oracles::n_poset();
    CHECK(oracles::count_by_permutations(np) == 5);
    CHECK(lebound::count_extensions(np) == 5);
}

TEST_CASE("count_extensions guard") {
    CHECK_THROWS_AS(lebound::count_extensions(antichain(25)), lebound::SizeError);
}

TEST_CASE("count agrees with the permutation oracle on every poset up to n=5") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : lebound::generate_all(n))
            CHECK(lebound::count_extensions(p) == oracles::count_by_permutations(p));
}

TEST_CASE("count agrees with the permutation oracle on random posets up to n=8") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 70; ++seed) {
        for (const double density : {0.15, 0.4, 0.7}) {
            const int n = 6 + static_cast<int>(seed % 3);
            const Poset p = lebound::random_poset(n, density, seed);
            CHECK(lebound::count_extensions(p) == oracles::count_by_permutations(p));
            ++checked;
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("enumeration yields each extension once, in element-lex order") {
    const Poset np = oracles::n_poset();
    const auto exts = lebound::enumerate_extensions(np);
    CHECK(BigCount(static_cast<int>(exts.size())) == lebound::count_extensions(np));

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> sequences;
    for (const LinearExtension& ext : exts) {
        CHECK(lebound::is_valid_extension(np, ext));
        CHECK(seen.insert(ext.ranks).second);
        std::vector<int> seq(np.size());
        for (int x = 0; x < np.size(); ++x) seq[ext.ranks[x] - 1] = x;
        sequences.push_back(std::move(seq));
    }
    CHECK(std::is_sorted(sequences.begin(), sequences.end()));

    CHECK(lebound::enumerate_extensions(chain(2)).size() == 1);
    CHECK(lebound::enumerate_extensions(antichain(2)).size() == 2);
    CHECK_THROWS_AS(lebound::enumerate_extensions(antichain(11)), lebound::SizeError);
}

TEST_CASE("extensions of P-x carry the sentinel and values 2..n") {
    const Poset np = oracles::n_poset();
    const auto fs = lebound::enumerate_extensions_minus(np, 2);
    CHECK(fs.size() == 3); // oracle: 1<3 on the remaining three elements
    for (const LinearExtension& f : fs) {
        CHECK(f.ranks[2] == 0);
        CHECK(lebound::is_valid_extension_minus(np, 2, f));
    }
    CHECK(lebound::enumerate_extensions_minus(np, 3).size() == 2);
}

TEST_CASE("greedy_inject on the smallest cases") {
    // Chain 0<1, x=1: the falling chain sweeps the whole chain.
    const Poset c2 = chain(2);
    LinearExtension f;
    f.ranks = {2, 0};
    const auto g = lebound::greedy_inject(c2, ElementSet::of({1}), 1, f);
    CHECK(g.ranks == std::vector<int>{1, 2});

    // Two-element antichain: the two injections land on distinct images.
    const Poset a2 = antichain(2);
    LinearExtension f0;
    f0.ranks = {0, 2};
    const auto g0 = lebound::greedy_inject(a2, ElementSet::of({0, 1}), 0, f0);
    CHECK(g0.ranks == std::vector<int>{1, 2});
    LinearExtension f1;
    f1.ranks = {2, 0};
    const auto g1 = lebound::greedy_inject(a2, ElementSet::of({0, 1}), 1, f1);
    CHECK(g1.ranks == std::vector<int>{2, 1});
}

TEST_CASE("greedy_inject validates its inputs") {
    const Poset c2 = chain(2);
    LinearExtension good;
    good.ranks = {2, 0};

    // value 1 is not allowed in an extension of P-x
    LinearExtension bad;
    bad.ranks = {1, 0};
    CHECK_THROWS_AS(lebound::greedy_inject(c2, ElementSet::of({1}), 1, bad),
                    lebound::ContractError);
    // x outside A
    CHECK_THROWS_AS(lebound::greedy_inject(c2, ElementSet::of({1}), 0, good),
                    lebound::ContractError);
    // A not an antichain
    CHECK_THROWS_AS(lebound::greedy_inject(c2, ElementSet::of({0, 1}), 1, good),
                    lebound::ContractError);
}

TEST_CASE("greedy_recover inverts greedy_inject on the chain example") {
    const Poset c2 = chain(2);
    LinearExtension g;
    g.ranks = {1, 2};
    const auto back = lebound::greedy_recover(c2, ElementSet::of({1}), g);
    REQUIRE(back.has_value());
    CHECK(back->first == 1);
    CHECK(back->second.ranks == std::vector<int>{2, 0});
}

TEST_CASE("greedy_recover returns absent when the greedy chain misses A") {
    const Poset a2 = antichain(2);
    LinearExtension g;
    g.ranks = {2, 1}; // greedy increasing chain from rank 1 is just {1}
    CHECK_FALSE(lebound::greedy_recover(a2, ElementSet::of({0}), g).has_value());
}

TEST_CASE("injection suite on the N poset with the maximal antichain") {
    const Poset np = oracles::n_poset();
    const ElementSet a = lebound::maximal_elements(np);
    REQUIRE(a == ElementSet::of({2, 3}));

    std::set<std::vector<int>> images;
    int domain = 0;
    for (int x : a.elements()) {
        for (const LinearExtension& f : lebound::enumerate_extensions_minus(np, x)) {
            ++domain;
            const LinearExtension g = lebound::greedy_inject(np, a, x, f);
            CHECK(lebound::is_valid_extension(np, g));
            CHECK(images.insert(g.ranks).second);
            const auto back = lebound::greedy_recover(np, a, g);
            REQUIRE(back.has_value());
            CHECK(back->first == x);
            CHECK(back->second == f);
        }
    }
    // Oracle domain sizes: e(P-2) = 3 and e(P-3) = 2; the injection hits all
    // five extensions because the maximal antichain meets every maximal chain.
    CHECK(domain == 5);
    CHECK(images.size() == 5);
    CHECK(BigCount(5) == lebound::count_extensions(np));
}

TEST_CASE("image characterization: recover hits exactly the injected extensions") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const int n = 4 + static_cast<int>(seed % 3);
        const Poset p = lebound::random_poset(n, 0.35, seed);
        const ElementSet a = lebound::maximal_elements(p);
        BigCount expected = 0;
        for (int x : a.elements())
            expected += lebound::count_extensions(
                lebound::induced_subposet(p, ElementSet::single(x)).poset);
        BigCount present = 0;
        for (const LinearExtension& g : lebound::enumerate_extensions(p)) {
            const auto back = lebound::greedy_recover(p, a, g);
            if (back) {
                ++present;
                CHECK(lebound::greedy_inject(p, a, back->first, back->second) == g);
            }
        }
        CHECK(present == expected);
    }
}

TEST_CASE("greedy increasing chain is always a maximal chain") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Poset p = lebound::random_poset(6, 0.4, seed);
        for (const LinearExtension& g : lebound::enumerate_extensions(p)) {
            const auto chain_elems = lebound::greedy_increasing_chain(p, g);
            REQUIRE(!chain_elems.empty());
            // Bottom is minimal, top maximal, neighbors are cover pairs.
            for (int y = 0; y < p.size(); ++y) {
                CHECK_FALSE(p.less(y, chain_elems.front()));
                CHECK_FALSE(p.less(chain_elems.back(), y));
            }
            for (std::size_t i = 0; i + 1 < chain_elems.size(); ++i) {
                CHECK(p.less(chain_elems[i], chain_elems[i + 1]));
                for (int z = 0; z < p.size(); ++z)
                    CHECK_FALSE((p.less(chain_elems[i], z) && p.less(z, chain_elems[i + 1])));
            }
        }
    }
}

TEST_CASE("recurrence gap: equality at maximal elements, defect elsewhere") {
    const Poset np = oracles::n_poset();

    const auto tight = lebound::recurrence_gap(np, lebound::maximal_elements(np));
    CHECK(tight.sum == tight.total);

    // A = {0} misses the maximal chains through 1; the oracle counts
    // e(P-0) = 2 against e(P) = 5.
    const auto loose = lebound::recurrence_gap(np, ElementSet::of({0}));
    CHECK(loose.sum == 2);
    CHECK(loose.total == 5);

    const auto all3 = lebound::recurrence_gap(antichain(3), ElementSet::of({0, 1, 2}));
    CHECK(all3.sum == 6);
    CHECK(all3.total == 6);
}

TEST_CASE("recurrence never exceeds the extension count on any antichain") {
    for (int n = 1; n <= 4; ++n) {
        for (const Poset& p : lebound::generate_all(n)) {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                const ElementSet s{mask};
                if (!lebound::is_antichain(p, s)) continue;
                const auto gap = lebound::recurrence_gap(p, s);
                CHECK(gap.sum <= gap.total);
            }
        }
    }
}
