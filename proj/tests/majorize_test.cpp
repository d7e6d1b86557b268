#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lebound/errors.hpp"
#include "lebound/majorize.hpp"

using lebound::Multiset;

namespace {

// All weakly decreasing positive sequences with the given bounds; the empty
// multiset is included.
std::vector<Multiset> universe(int max_elem, int max_size) {
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

Multiset random_multiset(std::mt19937_64& rng, int max_elem, int max_size) {
    std::vector<int> elems(rng() % (max_size + 1));
    for (int& e : elems) e = static_cast<int>(rng() % (max_elem + 1));
    return Multiset(std::move(elems));
}

} // namespace

TEST_CASE("multisets store descending and compare up to trailing zeros") {
    CHECK(Multiset({1, 3, 2}).elems() == std::vector<int>{3, 2, 1});
    CHECK(Multiset({2, 0}) == Multiset({2}));
    CHECK(Multiset{} == Multiset({0, 0}));
    CHECK_FALSE(Multiset({2, 1}) == Multiset({2}));
    CHECK_THROWS_AS(Multiset({-1}), lebound::ContractError);
}

TEST_CASE("prefix sums saturate") {
    const Multiset x({3, 1});
    CHECK(lebound::s_k(x, 0) == 0);
    CHECK(lebound::s_k(x, 1) == 3);
    CHECK(lebound::s_k(x, 5) == 4);
    CHECK(lebound::s(x) == 4);
    CHECK(lebound::s_k(Multiset{}, 3) == 0);
}

TEST_CASE("majorization basics") {
    CHECK(lebound::majorizes(Multiset({3, 1}), Multiset({2, 2})));
    CHECK_FALSE(lebound::majorizes(Multiset({2, 2}), Multiset({3, 1})));
    CHECK(lebound::majorizes(Multiset({4, 2, 1}), Multiset({3, 3, 1})));
    CHECK_FALSE(lebound::majorizes(Multiset({3, 1}), Multiset({3})));   // sums differ
    CHECK(lebound::majorizes(Multiset({2, 1}), Multiset({2, 1, 0})));   // zero padding
}

TEST_CASE("majorization is a partial order on sum-equal multisets") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 4000; ++trial) {
        const Multiset x = random_multiset(rng, 6, 5);
        const Multiset y = random_multiset(rng, 6, 5);
        const Multiset z = random_multiset(rng, 6, 5);
        CHECK(lebound::majorizes(x, x));
        if (lebound::majorizes(x, y) && lebound::majorizes(y, x)) CHECK(x == y);
        if (lebound::majorizes(x, y) && lebound::majorizes(y, z))
            CHECK(lebound::majorizes(x, z));
    }
}

TEST_CASE("factorial products") {
    CHECK(lebound::factorial_product(Multiset({3, 1})) == 6);
    CHECK(lebound::factorial_product(Multiset{}) == 1);
    CHECK(lebound::factorial_product(Multiset({2, 2})) == 4);
}

TEST_CASE("factorial Karamata, forward direction") {
    CHECK(lebound::karamata_factorial_check(Multiset({3, 1}), Multiset({2, 2})));
    CHECK(lebound::karamata_factorial_check(Multiset({2, 2}), Multiset({2, 2})));
    CHECK(lebound::karamata_factorial_check(Multiset({5, 0}), Multiset({3, 2})));
    CHECK_THROWS_AS(lebound::karamata_factorial_check(Multiset({2, 2}), Multiset({3, 1})),
                    lebound::ContractError);
}

TEST_CASE("factorial Karamata holds on every majorizing pair, elements <= 6 size <= 5") {
    const auto u = universe(6, 5);
    long long pairs = 0;
    for (const Multiset& x : u) {
        for (const Multiset& y : u) {
            if (!lebound::majorizes(x, y)) continue;
            ++pairs;
            CHECK(lebound::karamata_factorial_check(x, y));
        }
    }
    CHECK(pairs > 1000);
}

TEST_CASE("adjoining a common multiset never changes the majorization verdict") {
    CHECK(lebound::union_equivalence(Multiset({3, 1}), Multiset({2, 2}), Multiset({2})));
    CHECK(lebound::union_equivalence(Multiset({3, 1}), Multiset({2, 2}), Multiset{}));
    CHECK(lebound::majorizes(Multiset({3, 2, 1}), Multiset({2, 2, 2})));

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20000; ++trial) {
        const Multiset x = random_multiset(rng, 6, 5);
        const Multiset y = random_multiset(rng, 6, 5);
        const Multiset z = random_multiset(rng, 6, 5);
        CHECK(lebound::union_equivalence(x, y, z));
    }
}

TEST_CASE("decrement exchange") {
    CHECK(lebound::decrement_exchange(Multiset({3, 2}), 1) == Multiset({2, 2}));
    CHECK(lebound::decrement_exchange(Multiset({3, 2}), 2) == Multiset({3, 1}));
    CHECK(lebound::decrement_exchange(Multiset({1}), 1) == Multiset({0}));
    CHECK_THROWS_AS(lebound::decrement_exchange(Multiset({1}), 2), lebound::RangeError);
    CHECK_THROWS_AS(lebound::decrement_exchange(Multiset({1, 0}), 2), lebound::ContractError);
}

TEST_CASE("exchange step on the worked examples") {
    CHECK(lebound::exchange_step_check(Multiset({3, 2}), Multiset({2, 2}), 1));
    CHECK(lebound::exchange_step_check(Multiset({2, 1}), Multiset({2}), 2));
    CHECK(lebound::exchange_step_check(Multiset({1}), Multiset{}, 1));
}

TEST_CASE("exchange step rejects violated hypotheses") {
    // totals differ by 2
    CHECK_THROWS_AS(lebound::exchange_step_check(Multiset({4}), Multiset({2}), 1),
                    lebound::ContractError);
    // prefix drift of 2 at k=1
    CHECK_THROWS_AS(lebound::exchange_step_check(Multiset({4, 0}), Multiset({2, 1}), 1),
                    lebound::ContractError);
    // m=2 demands prefix equality at k=1
    CHECK_THROWS_AS(lebound::exchange_step_check(Multiset({3, 2}), Multiset({2, 2}), 2),
                    lebound::ContractError);
}

TEST_CASE("exchange step holds exhaustively, elements <= 5 size <= 4") {
    const auto u = universe(5, 4);
    long long cases = 0;
    for (const Multiset& x : u) {
        for (const Multiset& y : u) {
            if (lebound::s(y) != lebound::s(x) - 1) continue;
            bool pre = true;
            for (int k = 1; k <= 6 && pre; ++k) {
                const long long d = lebound::s_k(x, k) - lebound::s_k(y, k);
                if (d < 0 || d > 1) pre = false;
            }
            if (!pre) continue;
            const int divergence = lebound::first_divergence_index(x, y);
            for (int m = 1; m <= divergence; ++m) {
                ++cases;
                CHECK(lebound::exchange_step_check(x, y, m));
            }
        }
    }
    CHECK(cases > 500);
}

TEST_CASE("first divergence index") {
    CHECK(lebound::first_divergence_index(Multiset({3, 2}), Multiset({2, 2})) == 1);
    CHECK(lebound::first_divergence_index(Multiset({2, 1}), Multiset({2})) == 2);
    CHECK_THROWS_AS(lebound::first_divergence_index(Multiset({2}), Multiset({2})),
                    lebound::ContractError);
}
