#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "tancx/error.hpp"
#include "tancx/multiindex.hpp"

using namespace tancx;

namespace {

// Set-based reference versions of the index moves.
std::set<int> as_set(const MultiIndex& I) { return {I.entries().begin(), I.entries().end()}; }

std::set<int> ref_push(const std::set<int>& I, int i) {
    std::set<int> out;
    for (int e : I) out.insert(e > i ? e + 1 : e);
    return out;
}

std::optional<std::set<int>> ref_pull(const std::set<int>& I, int i, int ambient) {
    if (ambient == 0) return std::nullopt;  // no smaller ambient to land in
    std::set<int> out;
    for (int e : I) {
        const int moved = e > i ? e - 1 : e;
        if (moved < 1 || moved > ambient - 1 || !out.insert(moved).second) return std::nullopt;
    }
    return out;
}

}  // namespace

TEST_CASE("push and pull reproduce the worked examples", "[multiindex]") {
    const MultiIndex I({2, 3, 5, 7}, 8);
    CHECK(push(I, 3).entries() == std::vector<int>{2, 3, 6, 8});
    CHECK(push(I, 4).entries() == std::vector<int>{2, 3, 6, 8});
    CHECK(push(I, -1).entries() == std::vector<int>{3, 4, 6, 8});
    CHECK(push(I, 10).entries() == I.entries());
    CHECK(push(I, 3).ambient() == 9);

    const MultiIndex P({2, 3, 6, 8}, 9);
    CHECK_FALSE(pull(P, 2).has_value());
    REQUIRE(pull(P, 3).has_value());
    CHECK(*pull(P, 3) == I);
    CHECK(*pull(P, 4) == I);
}

TEST_CASE("push and pull agree with set arithmetic for ambient <= 7", "[multiindex]") {
    for (int k = 0; k <= 7; ++k) {
        for (const MultiIndex& J : all_subsets(k)) {
            for (int i = -1; i <= k + 1; ++i) {
                CHECK(as_set(push(J, i)) == ref_push(as_set(J), i));
                const auto pulled = pull(J, i);
                const auto expected = ref_pull(as_set(J), i, k);
                REQUIRE(pulled.has_value() == expected.has_value());
                if (pulled) {
                    CHECK(as_set(*pulled) == *expected);
                    CHECK(pulled->ambient() == k - 1);
                }
                CHECK(pull(push(J, i), i) == J);
            }
        }
    }
}

TEST_CASE("raise_swap equals push after pull, lower_swap inverts it", "[multiindex]") {
    for (int k = 1; k <= 7; ++k) {
        for (const MultiIndex& J : all_subsets(k)) {
            for (int i = 0; i <= k; ++i) {
                const auto raised = raise_swap(J, i);
                const bool defined = J.contains(i) && !J.contains(i + 1) && i + 1 <= k;
                REQUIRE(raised.has_value() == defined);
                if (!raised) continue;
                std::set<int> expected = as_set(J);
                expected.erase(i);
                expected.insert(i + 1);
                CHECK(as_set(*raised) == expected);
                const auto pulled = pull(J, i);
                REQUIRE(pulled.has_value());
                CHECK(push(*pulled, i - 1) == *raised);
                CHECK(lower_swap(*raised, i) == J);
            }
        }
    }
}

TEST_CASE("lower_swap excludes i = 0", "[multiindex]") {
    const MultiIndex J({1, 3}, 4);
    CHECK_FALSE(lower_swap(J, 0).has_value());
    CHECK(lower_swap(J, 2) == MultiIndex({1, 2}, 4));
    CHECK_FALSE(lower_swap(J, 1).has_value());  // 1 already present
}

TEST_CASE("subsets are lexicographic and complete", "[multiindex]") {
    for (int k = 0; k <= 7; ++k) {
        std::size_t total = 0;
        for (int m = 0; m <= k; ++m) {
            const auto list = subsets(k, m);
            CHECK(list.size() == binomial(k, m));
            CHECK(std::is_sorted(list.begin(), list.end()));
            CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
            for (const auto& I : list) CHECK(I.size() == static_cast<std::size_t>(m));
            total += list.size();
        }
        CHECK(total == (std::size_t{1} << k));
        CHECK(all_subsets(k).size() == total);
    }
    const auto two_of_four = subsets(4, 2);
    CHECK(two_of_four.front().entries() == std::vector<int>{1, 2});
    CHECK(two_of_four.back().entries() == std::vector<int>{3, 4});
    CHECK_THROWS_AS(subsets(3, 4), InvalidArgument);
    CHECK_THROWS_AS(subsets(-1, 0), InvalidArgument);
}

TEST_CASE("masks round-trip and malformed indices are rejected", "[multiindex]") {
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        const MultiIndex I = MultiIndex::from_mask(mask, 6);
        CHECK(I.mask() == mask);
    }
    CHECK(MultiIndex::full(3).is_full());
    CHECK(MultiIndex::full(3).to_string() == "(1,2,3)");
    CHECK(MultiIndex({}, 2).to_string() == "()");
    CHECK_THROWS_AS(MultiIndex({2, 2}, 3), InvalidArgument);
    CHECK_THROWS_AS(MultiIndex({3, 1}, 3), InvalidArgument);
    CHECK_THROWS_AS(MultiIndex({0}, 3), InvalidArgument);
    CHECK_THROWS_AS(MultiIndex({4}, 3), InvalidArgument);
}
