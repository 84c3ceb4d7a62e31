#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derange/perm_oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace derange::perm;
using derange::exact::Integer;

TEST_CASE("permutation validity and fixed points") {
    CHECK(is_valid_permutation({}));
    CHECK(is_valid_permutation({0}));
    CHECK(is_valid_permutation({2, 0, 1}));
    CHECK(!is_valid_permutation({0, 0, 2}));
    CHECK(!is_valid_permutation({0, 2}));
    CHECK(!is_valid_permutation({-1, 0}));

    CHECK(fixed_point_count({0, 1, 2, 3}) == 4);
    CHECK(fixed_point_count({1, 0, 3, 2}) == 0);
    CHECK(fixed_point_count({0, 2, 1}) == 1);
    CHECK(fixed_point_count({}) == 0);
}

TEST_CASE("heap generator covers S_3 with one swap per step") {
    HeapGenerator gen(3);
    std::vector<Permutation> seen = {gen.current()};
    while (gen.advance()) {
        const Permutation& cur = gen.current();
        CHECK(is_valid_permutation(cur));
        // Minimal change: consecutive permutations differ in exactly two slots.
        int moved = 0;
        for (int i = 0; i < 3; ++i) {
            moved += cur[i] != seen.back()[i];
        }
        CHECK(moved == 2);
        seen.push_back(cur);
    }
    CHECK(seen.size() == 6);
    CHECK(gen.swap_count() == 5);
    CHECK(std::set<Permutation>(seen.begin(), seen.end()).size() == 6);
}

TEST_CASE("heap generator handles the empty and singleton cases") {
    HeapGenerator empty(0);
    CHECK(empty.current().empty());
    CHECK(!empty.advance());
    CHECK(empty.swap_count() == 0);

    HeapGenerator one(1);
    CHECK(one.current() == Permutation{0});
    CHECK(!one.advance());

    int visits = 0;
    for_each_permutation(0, [&](const Permutation& sigma) {
        CHECK(sigma.empty());
        ++visits;
    });
    CHECK(visits == 1);
}

TEST_CASE("heap generator emits each of the n! permutations exactly once") {
    for (int n : {4, 6, 8}) {
        CAPTURE(n);
        std::set<Permutation> seen;
        HeapGenerator gen(n);
        seen.insert(gen.current());
        while (gen.advance()) {
            CHECK(seen.insert(gen.current()).second);
        }
        std::uint64_t expected = 1;
        for (int k = 2; k <= n; ++k) {
            expected *= static_cast<std::uint64_t>(k);
        }
        CHECK(seen.size() == expected);
        CHECK(gen.swap_count() == expected - 1);
    }
}

TEST_CASE("heap stream matches std::next_permutation as a set") {
    std::set<Permutation> lexicographic;
    Permutation p = {0, 1, 2, 3, 4, 5};
    do {
        lexicographic.insert(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::set<Permutation> heap;
    for_each_permutation(6, [&](const Permutation& sigma) { heap.insert(sigma); });
    CHECK(heap == lexicographic);
}

TEST_CASE("brute-force derangement counts") {
    CHECK(brute_derangement_count(0) == 1);
    CHECK(brute_derangement_count(1) == 0);
    CHECK(brute_derangement_count(2) == 1);
    CHECK(brute_derangement_count(4) == 9);
    CHECK(brute_derangement_count(7) == 1854);
}

TEST_CASE("brute-force sum rule") {
    CHECK(brute_sum_rule(0) == 0);
    CHECK(brute_sum_rule(2) == 2);
    CHECK(brute_sum_rule(5) == 264);
}

TEST_CASE("factorial blowup guards") {
    CHECK_THROWS_AS(HeapGenerator(13), CapExceeded);
    CHECK_THROWS_AS(brute_derangement_count(13), CapExceeded);
    CHECK_THROWS_AS(for_each_permutation(5, [](const Permutation&) {}, 4), CapExceeded);
    CHECK_THROWS_AS(brute_sum_rule(11), CapExceeded);
    CHECK_THROWS_AS(HeapGenerator(-1), std::invalid_argument);
    // The guard is an invalid_argument, so generic handlers catch it too.
    CHECK_THROWS_AS(brute_derangement_count(13), std::invalid_argument);
}
