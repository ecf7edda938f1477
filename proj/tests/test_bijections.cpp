#include <doctest.h>

#include "inctab/bijections.hpp"
#include "inctab/dynamics.hpp"
#include "oracles.hpp"

using namespace inctab;

namespace {

IncreasingTableau T(Grid g) { return IncreasingTableau::from_rows(std::move(g)); }

}  // namespace

TEST_SUITE("bijections") {

TEST_CASE("flag tableau of the running example") {
    const auto t = T({{1, 2, 4, 5, 6}, {2, 3, 6, 7, 8}});
    const auto flag = to_flag(t);
    CHECK(flag.tableau() == T({{1, 4, 5}, {2, 6, 8}, {3}, {7}}));
    CHECK(flag.n() == 5);
    CHECK(flag.k() == 2);
    CHECK(from_flag(flag) == t);
    CHECK_THROWS(FlagSYT(T({{1, 2}, {3}, {4}})));  // not (a, a, 1^k)
}

TEST_CASE("F, d and the skew flag") {
    const auto t = T({{1, 2, 3, 4, 7}, {4, 5, 6, 7, 8}});
    CHECK(to_flag(t).tableau() == T({{1, 2, 3}, {4, 6, 7}, {5}, {8}}));
    CHECK(d_tableau(t) == Grid{{1, 2, 7}, {5, 6, 8}});
    const auto skew = skew_flag(t);
    CHECK(skew.outer == PartitionShape({3, 3, 3, 3}));
    CHECK(skew.inner == PartitionShape({2, 2}));
    CHECK(skew.rows == Grid{{3}, {4}, {1, 2, 7}, {5, 6, 8}});
    CHECK(reading_word(skew) == std::vector<int>{5, 6, 8, 1, 2, 7, 4, 3});
    CHECK(schensted_insert(reading_word(skew)) == to_flag(t).tableau());
    CHECK(rectify_skew_flag(t) == to_flag(t));
}

TEST_CASE("Schensted insertion") {
    CHECK(schensted_insert({3, 1, 2}) == T({{1, 2}, {3}}));
    CHECK(schensted_insert({2, 1, 3}) == T({{1, 3}, {2}}));
    CHECK_THROWS(schensted_insert({1, 1}));
    CHECK_THROWS(schensted_insert({1, 3}));
}

TEST_CASE("skew of rot") {
    const auto s = rot_skew(T({{1, 2, 4}, {3, 4, 5}}));
    CHECK(s.outer == PartitionShape({3, 3}));
    CHECK(s.inner == PartitionShape{});
    CHECK(s.rows == Grid{{1, 2, 3}, {2, 4, 5}});
}

TEST_CASE("flag bijection and evacuation, exhaustively") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k)
            for (const auto& t : enumerate_two_row(n, k)) {
                const auto flag = to_flag(t);
                REQUIRE(from_flag(flag) == t);
                REQUIRE(maj(t) == major_index(flag.tableau()));
                REQUIRE(flag_evacuation_commutes(t).commutes);
                REQUIRE(rectify_skew_flag(t) == flag);
            }
}

TEST_CASE("noncrossing partition of the running example") {
    const auto t = T({{1, 2, 4, 5, 6}, {2, 3, 6, 7, 8}});
    const auto p = to_ncpartition(t);
    CHECK(p.str() == "{{1,2,3},{4,8},{5,6,7}}");
    CHECK(p.is_noncrossing());
    CHECK_FALSE(p.has_singleton());
    CHECK(from_ncpartition(p) == t);
    CHECK(rotate_nc(p) == to_ncpartition(k_promote(t)));
    CHECK(rotate_nc(NCPartition(4, {{1, 2}, {3, 4}})) == NCPartition(4, {{4, 1}, {2, 3}}));
    CHECK_FALSE(NCPartition(4, {{1, 3}, {2, 4}}).is_noncrossing());
    CHECK_THROWS(NCPartition(3, {{1, 2}}));
    CHECK_THROWS(NCPartition(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("rotation commutes with promotion, exhaustively") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k)
            for (const auto& t : enumerate_two_row(n, k)) {
                const auto p = to_ncpartition(t);
                REQUIRE(p.ground_size() == 2 * n - k);
                REQUIRE(p.num_blocks() == static_cast<std::size_t>(n - k));
                REQUIRE(from_ncpartition(p) == t);
                REQUIRE(to_ncpartition(k_promote(t)) == rotate_nc(p));
            }
}

TEST_CASE("noncrossing enumeration against set partitions") {
    for (int n = 1; n <= 9; ++n) {
        std::set<std::vector<std::vector<int>>> expected;
        oracle::set_partitions(n, [&](const std::vector<int>& label) {
            if (oracle::crosses(label)) return;
            std::map<int, std::vector<int>> blocks;
            for (int i = 0; i < n; ++i) blocks[label[i]].push_back(i + 1);
            std::vector<std::vector<int>> b;
            for (auto& [_, v] : blocks) b.push_back(v);
            std::sort(b.begin(), b.end());
            expected.insert(b);
        });
        std::set<std::vector<std::vector<int>>> got;
        for (const auto& p : enumerate_noncrossing(n)) got.insert(p.blocks());
        CHECK_MESSAGE(got == expected, "n=" << n);
    }
}

TEST_CASE("type-B enumeration against set partitions") {
    for (int n = 1; n <= 4; ++n) {
        const auto brute = typeb_bruteforce(n);
        const auto reference = oracle::typeb_by_set_partitions(n);
        std::map<oracle::TypeBTally, std::int64_t> converted;
        for (const auto& [key, count] : brute) converted[{key.pairs, key.central, key.singleton_free}] = count;
        CHECK_MESSAGE(converted == reference, "N=" << n);
    }
    const auto three = typeb_bruteforce(3);
    CHECK(three.at({1, false, true}) == 3);
}

}
