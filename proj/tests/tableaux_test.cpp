#include "doctest.h"
#include "oracles.hpp"
#include "skewsign/tableaux.hpp"

#include <set>

using namespace skewsign;

namespace {

std::vector<int> plain_word(const Tableau& t) {
    std::vector<int> out;
    for (const auto& g : t.reading_word()) out.push_back(g.value);
    return out;
}

Tableau worked_example() {
    return Tableau::from_entries(SkewShape(Partition({6, 4, 2, 2, 1}), Partition({4, 3, 2})),
                                 {{{1, 5}, 1}, {{1, 6}, 4}, {{2, 4}, 3}, {{4, 1}, 2}, {{4, 2}, 6}, {{5, 1}, 5}});
}

std::vector<SkewShape> shapes_up_to(int max_cells, int max_outer) {
    std::vector<SkewShape> out;
    for (int size = 0; size <= max_outer; ++size)
        for (const auto& lambda : enumerate_partitions(size))
            for (const auto& mu : enumerate_subshapes(lambda))
                if (lambda.size() - mu.size() <= max_cells) out.emplace_back(lambda, mu);
    return out;
}

}  // namespace

TEST_CASE("ghosted values order eps before num") {
    CHECK(GhostedValue::eps(100) < GhostedValue::num(-5));
    CHECK(GhostedValue::eps(1) < GhostedValue::eps(2));
    CHECK(GhostedValue::num(1) < GhostedValue::num(2));
    CHECK(GhostedValue::eps(3) != GhostedValue::num(3));
}

TEST_CASE("worked example tableau") {
    const Tableau t = worked_example();
    CHECK(plain_word(t) == std::vector<int>{1, 4, 3, 2, 6, 5});
    CHECK(count_inversions(std::span<const GhostedValue>(t.reading_word())) == 4);
    CHECK(tableau_sign(t) == 1);
    CHECK(tableau_invsign(t) == -1);
    CHECK(t.is_standard());
    CHECK(t.violation().empty());
}

TEST_CASE("reading word of small tableaux") {
    CHECK(Tableau::empty_on(Partition({3, 1})).reading_word().empty());
    const auto column = Tableau::from_entries(SkewShape(Partition({1, 1})), {{{1, 1}, 1}, {{2, 1}, 2}});
    CHECK(plain_word(column) == std::vector<int>{1, 2});
    CHECK(tableau_sign(column) == 1);
    CHECK(tableau_invsign(column) == -1);
}

TEST_CASE("word signs") {
    CHECK(word_sign(std::vector<int>{1, 4, 3, 2, 6, 5}) == 1);
    CHECK(word_invsign(std::vector<int>{1, 4, 3, 2, 6, 5}) == -1);
    CHECK(word_sign(std::vector<int>{}) == 1);
    CHECK(word_sign(std::vector<int>{1, 3, 2}) == -1);
    CHECK(word_invsign(std::vector<int>{1, 3, 2}) == 1);
    const auto empty = Tableau::empty_on(Partition({2}));
    CHECK(tableau_sign(empty) == 1);
    CHECK(tableau_invsign(empty) == 1);
}

TEST_CASE("validation rejects broken fillings") {
    const SkewShape s(Partition({2, 2}));
    CHECK_THROWS_AS(Tableau::from_entries(s, {{{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 3}, {{2, 2}, 4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Tableau::from_entries(s, {{{1, 1}, 1}, {{1, 2}, 2}, {{2, 1}, 4}, {{2, 2}, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Tableau::from_entries(s, {{{1, 1}, 1}, {{1, 2}, 3}, {{2, 1}, 2}, {{2, 2}, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Tableau::from_entries(s, {{{1, 1}, 1}, {{1, 2}, 2}, {{2, 1}, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Tableau::from_entries(s, {{{1, 1}, 1}, {{1, 2}, 2}, {{2, 1}, 3}, {{3, 1}, 4}}),
                    std::invalid_argument);
    CHECK_NOTHROW(Tableau::from_entries(s, {{{1, 1}, 1}, {{1, 2}, 3}, {{2, 1}, 2}, {{2, 2}, 4}}));
    // Cells of a skew shape in different columns impose nothing on each other.
    CHECK_NOTHROW(Tableau::from_entries(SkewShape(Partition({2, 1}), Partition({1})), {{{1, 2}, 2}, {{2, 1}, 1}}));
}

TEST_CASE("validity check agrees with the brute-force row/column filter") {
    // Every assignment of 1..4 to (3,2)/(1): exactly the oracle's words pass.
    const SkewShape shape(Partition({3, 2}), Partition({1}));
    const auto all = cells(shape);
    const auto good = oracle::standard_words({3, 2}, {1});
    const std::set<std::vector<int>> good_set(good.begin(), good.end());
    std::vector<int> w{1, 2, 3, 4};
    int accepted = 0;
    do {
        std::vector<std::pair<Cell, int>> entries;
        for (std::size_t i = 0; i < all.size(); ++i) entries.push_back({all[i], w[i]});
        bool ok = true;
        try {
            (void)Tableau::from_entries(shape, entries);
        } catch (const std::invalid_argument&) {
            ok = false;
        }
        CHECK(ok == (good_set.count(w) == 1));
        accepted += ok ? 1 : 0;
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK(accepted == static_cast<int>(good.size()));
}

TEST_CASE("enumerate_standard_tableaux examples") {
    CHECK(enumerate_standard_tableaux(SkewShape(Partition({2, 1}))).size() == 2);
    const auto same = enumerate_standard_tableaux(SkewShape(Partition({3, 1}), Partition({3, 1})));
    REQUIRE(same.size() == 1);
    CHECK(same[0].reading_word().empty());
    CHECK(enumerate_standard_tableaux(SkewShape(Partition({2, 1}), Partition({1}))).size() == 2);
}

TEST_CASE("count_standard_tableaux examples") {
    CHECK(count_standard_tableaux(SkewShape(Partition({2, 2}))) == 2);
    CHECK(count_standard_tableaux(SkewShape(Partition({3, 2}))) == 5);
    CHECK(count_standard_tableaux(SkewShape(Partition({4, 2}), Partition({4, 2}))) == 1);
    CHECK(count_standard_tableaux(SkewShape(Partition({3, 2, 1}))) == 16);
    CHECK(count_standard_tableaux(SkewShape(Partition({4, 3, 2, 1}))) == 768);
}

TEST_CASE("imbalance examples") {
    CHECK(imbalance(SkewShape(Partition({2, 1}), Partition({2, 1}))) == 1);
    CHECK(imbalance(SkewShape(Partition{})) == 1);
    CHECK(imbalance(SkewShape(Partition({2, 1}))) == 0);
    CHECK(imbalance(SkewShape(Partition({3, 1}))) == 1);
}

TEST_CASE("enumeration, counting and imbalance agree with the oracle on shapes up to 7 cells") {
    int shapes = 0;
    for (const auto& shape : shapes_up_to(7, 8)) {
        CAPTURE(shape.to_string());
        const auto expected = oracle::standard_words(shape.outer().vec(), shape.inner().vec());
        const auto got = enumerate_standard_tableaux(shape);
        REQUIRE(got.size() == expected.size());
        std::set<std::vector<int>> got_words;
        std::int64_t signed_count = 0;
        for (const auto& t : got) {
            CHECK(t.is_standard());
            CHECK(t.shape() == shape);
            got_words.insert(plain_word(t));
        }
        CHECK(got_words.size() == got.size());
        for (const auto& w : expected) {
            CHECK(got_words.count(w) == 1);
            signed_count += oracle::sign_of(w);
        }
        CHECK(count_standard_tableaux(shape) == static_cast<std::int64_t>(expected.size()));
        CHECK(imbalance(shape) == signed_count);
        ++shapes;
    }
    CHECK(shapes > 500);
}

TEST_CASE("imbalance and counts match enumeration on shapes up to 9 cells") {
    for (const auto& shape : shapes_up_to(9, 9)) {
        if (shape.size() < 8) continue;
        CAPTURE(shape.to_string());
        std::int64_t count = 0, signed_count = 0;
        for_each_standard_tableau(shape, [&](const Tableau& t) {
            ++count;
            signed_count += tableau_sign(t);
        });
        CHECK(count_standard_tableaux(shape) == count);
        CHECK(imbalance(shape) == signed_count);
    }
}

TEST_CASE("enumeration order is deterministic") {
    const SkewShape shape(Partition({3, 2}), Partition({1}));
    CHECK(enumerate_standard_tableaux(shape) == enumerate_standard_tableaux(shape));
}

TEST_CASE("sign times inverse sign depends only on the size") {
    for (const auto& shape : shapes_up_to(6, 7)) {
        const auto n = static_cast<std::int64_t>(shape.size());
        for_each_standard_tableau(shape, [&](const Tableau& t) {
            CHECK(tableau_sign(t) * tableau_invsign(t) == parity_sign(n * (n - 1) / 2));
        });
    }
}

TEST_CASE("chess tableaux") {
    CHECK(is_chess(Tableau::from_entries(SkewShape(Partition({1, 1})), {{{1, 1}, 1}, {{2, 1}, 2}})));
    CHECK_FALSE(is_chess(Tableau::from_entries(SkewShape(Partition({2, 1})), {{{1, 1}, 1}, {{1, 2}, 2}, {{2, 1}, 3}})));
    CHECK(is_chess(Tableau::from_entries(SkewShape(Partition({1})), {{{1, 1}, 1}})));
    // (2)/(1): the single cell sits at odd distance from (1,1).
    CHECK_FALSE(is_chess(Tableau::from_entries(SkewShape(Partition({2}), Partition({1})), {{{1, 2}, 1}})));
}

TEST_CASE("standardize") {
    const auto t = Tableau::from_entries(SkewShape(Partition({2})), {{{1, 1}, 3}, {{1, 2}, 5}});
    CHECK(plain_word(standardize(t)) == std::vector<int>{1, 2});
    const auto w = worked_example();
    CHECK(standardize(w) == w);
    const auto three = Tableau::from_entries(SkewShape(Partition({2, 1}), Partition({1})),
                                             {{{1, 2}, 7}, {{2, 1}, 2}});
    CHECK(plain_word(standardize(three)) == std::vector<int>{2, 1});
    const auto mixed = Tableau::from_entries(SkewShape(Partition({3, 1})), {{{1, 1}, 2}, {{1, 2}, 7}, {{1, 3}, 9}, {{2, 1}, 4}});
    CHECK(plain_word(standardize(mixed)) == std::vector<int>{1, 3, 4, 2});
}

TEST_CASE("standardize preserves the sign") {
    for (const auto& shape : shapes_up_to(5, 6)) {
        for_each_standard_tableau(shape, [&](const Tableau& t) {
            std::vector<std::pair<Cell, int>> scaled;
            for (const auto& [c, g] : t.entries()) scaled.push_back({c, 3 * g.value + 7});
            const auto big = Tableau::from_entries(shape, scaled);
            CHECK(tableau_sign(big) == tableau_sign(t));
            CHECK(standardize(big) == t);
        });
    }
}
