#include "doctest.h"
#include "oracles.hpp"
#include "skewsign/shapes.hpp"

using namespace skewsign;

TEST_CASE("partition normal form") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({0}).empty());
    CHECK(Partition({4, 2, 1}).size() == 7);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0, 1}), std::invalid_argument);
    CHECK(Partition({3, 1}).column_height(1) == 2);
    CHECK(Partition({3, 1}).column_height(3) == 1);
    CHECK(Partition({3, 1}).column_height(4) == 0);
}

TEST_CASE("parse_partition") {
    CHECK(parse_partition("3,2,1") == Partition({3, 2, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition(" 4 , 2 ") == Partition({4, 2}));
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
}

TEST_CASE("contains") {
    CHECK(contains(Partition({4, 3, 2}), Partition({6, 4, 2, 2, 1})));
    CHECK(contains(Partition{}, Partition({5, 1})));
    CHECK(contains(Partition{}, Partition{}));
    CHECK_FALSE(contains(Partition({3}), Partition({2, 2})));
    CHECK_FALSE(contains(Partition({1, 1, 1}), Partition({3, 1})));
}

TEST_CASE("skew shape identity keeps both partitions") {
    SkewShape a(Partition({6, 4, 2, 2, 1}), Partition({4, 3, 2}));
    SkewShape b(Partition({6, 4, 3, 2, 1}), Partition({4, 3, 3}));
    CHECK(cells(a) == cells(b));
    CHECK(a != b);
    CHECK_THROWS_AS(SkewShape(Partition({2, 2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("cells in reading order") {
    SkewShape s(Partition({6, 4, 2, 2, 1}), Partition({4, 3, 2}));
    const std::vector<Cell> expected{{1, 5}, {1, 6}, {2, 4}, {4, 1}, {4, 2}, {5, 1}};
    CHECK(cells(s) == expected);
    CHECK(cells(SkewShape(Partition({3, 1}), Partition({3, 1}))).empty());
    CHECK(cells(SkewShape(Partition({2, 1}))) == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("shape statistics on worked values") {
    CHECK(v(Partition({1, 1})) == 1);
    CHECK(v(Partition{}) == 0);
    CHECK(v(Partition({2, 2})) == 2);
    CHECK(h(Partition({3, 2})) == 2);
    CHECK(h(Partition{}) == 0);
    CHECK(h(Partition({1, 1, 1})) == 0);
    CHECK(d(Partition({2, 2})) == 1);
    CHECK(d(Partition({3, 3, 2})) == 1);
    CHECK(d(Partition({1})) == 0);

    CHECK(oracle::max_packing({1, 1}, 2, 1) == 1);
    CHECK(oracle::max_packing({2, 2}, 2, 1) == 2);
    CHECK(oracle::max_packing({3, 2}, 1, 2) == 2);
    CHECK(oracle::max_packing({2, 2}, 2, 2) == 1);
    CHECK(oracle::max_packing({3, 3, 2}, 2, 2) == 1);
}

TEST_CASE("v, h, d match brute-force packing for |lambda| <= 10") {
    int checked = 0;
    for (int n = 0; n <= 10; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            CAPTURE(lambda.to_string());
            CHECK(v(lambda) == oracle::max_packing(lambda.vec(), 2, 1));
            CHECK(h(lambda) == oracle::max_packing(lambda.vec(), 1, 2));
            CHECK(d(lambda) == oracle::max_packing(lambda.vec(), 2, 2));
            CHECK(rsgn(SkewShape(lambda)) == parity_sign(v(lambda)));
            ++checked;
        }
    }
    CHECK(checked == 139);
}

TEST_CASE("rsgn") {
    CHECK(rsgn(SkewShape(Partition({2, 2}), Partition({1}))) == 1);
    CHECK(rsgn(SkewShape(Partition({3, 2}), Partition({3, 2}))) == 1);
    CHECK(rsgn(SkewShape(Partition({1, 1}))) == -1);
}

TEST_CASE("enumerate_partitions") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(8).size() == 22);
    for (int n = 0; n <= 12; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(static_cast<std::int64_t>(all.size()) == oracle::partition_count(n, n));
        CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const auto& p : all) CHECK(p.size() == n);
    }
    CHECK(enumerate_partitions(3) == std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
}

TEST_CASE("enumerate_outer_extensions") {
    CHECK(enumerate_outer_extensions(Partition({1}), 2) ==
          std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
    CHECK(enumerate_outer_extensions(Partition({2}), 2) ==
          std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})});
    const Partition alpha({3, 1});
    CHECK(enumerate_outer_extensions(alpha, 0) == std::vector<Partition>{alpha});

    // Cross-check against filtering all partitions of |alpha| + n.
    for (int size = 0; size <= 5; ++size) {
        for (const auto& a : enumerate_partitions(size)) {
            for (int n = 0; n <= 4; ++n) {
                std::vector<Partition> filtered;
                for (const auto& lambda : enumerate_partitions(size + n))
                    if (contains(a, lambda)) filtered.push_back(lambda);
                CHECK(enumerate_outer_extensions(a, n) == filtered);
            }
        }
    }
}

TEST_CASE("enumerate_inner_subshapes") {
    CHECK(enumerate_inner_subshapes(Partition({2, 1}), 1) == std::vector<Partition>{Partition({2}), Partition({1, 1})});
    CHECK(enumerate_inner_subshapes(Partition({2, 1}), 0) == std::vector<Partition>{Partition({2, 1})});
    CHECK(enumerate_inner_subshapes(Partition({1}), 2).empty());
    for (int size = 0; size <= 6; ++size) {
        for (const auto& a : enumerate_partitions(size)) {
            for (int n = 0; n <= size; ++n) {
                std::vector<Partition> filtered;
                for (const auto& mu : enumerate_partitions(size - n))
                    if (contains(mu, a)) filtered.push_back(mu);
                CHECK(enumerate_inner_subshapes(a, n) == filtered);
            }
        }
    }
    CHECK(enumerate_subshapes(Partition({3, 2, 1})).size() == 14);
    for (int size = 0; size <= 6; ++size)
        for (const auto& a : enumerate_partitions(size)) {
            std::vector<Partition> filtered;
            for (int k = size; k >= 0; --k)
                for (const auto& mu : enumerate_partitions(k))
                    if (contains(mu, a)) filtered.push_back(mu);
            std::sort(filtered.begin(), filtered.end(), std::greater<>());
            CHECK(enumerate_subshapes(a) == filtered);
        }
}

TEST_CASE("cells(lambda/mu) has |lambda| - |mu| entries") {
    for (int size = 0; size <= 6; ++size)
        for (const auto& lambda : enumerate_partitions(size))
            for (const auto& mu : enumerate_subshapes(lambda)) {
                SkewShape s(lambda, mu);
                CHECK(static_cast<int>(cells(s).size()) == lambda.size() - mu.size());
                for (const auto& c : cells(s)) CHECK(s.contains_cell(c));
            }
}
