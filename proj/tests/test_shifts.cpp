#include <gtest/gtest.h>

#include "common.hpp"
#include "oracles.hpp"

using namespace shiftlab;
using testing_util::catalog_shift;
using testing_util::str;
using testing_util::w;

TEST(Shifts, CountsOnBoxes) {
    const auto full = catalog_shift("full2.sft");
    const auto golden = catalog_shift("golden_mean.sft");
    const auto one = catalog_shift("one_block_of_ones.sofic");
    for (coord_t n = 1; n <= 20; ++n) {
        EXPECT_EQ(count_language(full, Shape::box(n, 1)), bigint(1) << n);
        EXPECT_EQ(count_language(golden, Shape::box(n, 1)), bigint(oracle::fib(static_cast<int>(n) + 2)));
    }
    EXPECT_EQ(count_language(golden, Shape::box(1, 1)), 2);
    EXPECT_EQ(count_language(golden, Shape::box(2, 1)), 3);
    EXPECT_EQ(count_language(golden, Shape::box(3, 1)), 5);
    EXPECT_EQ(count_language(one, Shape::box(3, 1)), 7);
    std::vector<std::string> words;
    for (const auto& p : language(one, Shape::box(3, 1))) words.push_back(str(p.values()));
    EXPECT_EQ(std::count(words.begin(), words.end(), "101"), 0);
    EXPECT_EQ(words.size(), 7u);
}

TEST(Shifts, LanguagesMatchBruteForce) {
    const auto golden = catalog_shift("golden_mean.sft");
    const auto period2 = catalog_shift("period2.sft");
    const auto one = catalog_shift("one_block_of_ones.sofic");
    const auto p2_forbidden = std::vector<std::string>{"00", "11"};
    for (int n = 1; n <= 9; ++n) {
        const auto g_oracle = oracle::sft_language({"11"}, n);
        const auto p_oracle = oracle::sft_language(p2_forbidden, n);
        for (const auto& word : oracle::all_words(n)) {
            EXPECT_EQ(in_language(golden, w(word)), g_oracle.count(word) == 1) << word;
            EXPECT_EQ(in_language(period2, w(word)), p_oracle.count(word) == 1) << word;
            EXPECT_EQ(in_language(one, w(word)), oracle::one_block_word(word)) << word;
        }
    }
}

TEST(Shifts, CountsWithHoles) {
    // Shape {0, 2}: pairs (x0, x2). Golden mean allows all four (1?1 via 101).
    const auto golden = catalog_shift("golden_mean.sft");
    EXPECT_EQ(count_language(golden, Shape::of({0, 2})), 4);
    EXPECT_EQ(count_language(golden, Shape::of({0, 1})), 3);
    const auto period2 = catalog_shift("period2.sft");
    EXPECT_EQ(count_language(period2, Shape::of({0, 2})), 2);
    EXPECT_EQ(count_language(period2, Shape::of({0, 3})), 2);
    // Brute force: projections of golden words of length 7 onto {0, 3, 6}.
    std::set<std::string> seen;
    for (const auto& word : oracle::sft_language({"11"}, 7))
        seen.insert(std::string{word[0], word[3], word[6]});
    EXPECT_EQ(count_language(golden, Shape::of({0, 3, 6})), bigint(seen.size()));
}

TEST(Shifts, CylinderClasses) {
    const auto full = catalog_shift("full2.sft");
    const auto golden = catalog_shift("golden_mean.sft");
    const auto zeros = catalog_shift("zeros.sft");
    for (coord_t n = 1; n <= 10; ++n)
        EXPECT_EQ(cylinder_entourage_classes(full, Shape::of({0}), Shape::box(n, 1)), bigint(1) << n);
    EXPECT_EQ(cylinder_entourage_classes(golden, Shape::of({0}), Shape::box(3, 1)), 5);
    EXPECT_EQ(cylinder_entourage_classes(golden, Shape::of({0}), Shape::of({0})), 2);
    EXPECT_EQ(cylinder_entourage_classes(zeros, Shape::of({0}), Shape::of({0})), 1);
    EXPECT_EQ(occurring_symbols(zeros).size(), 1u);
}

TEST(Shifts, TwoDimensionalCounts) {
    const auto hs = catalog_shift("hard_square.sft");
    // Independent sets on grid graphs: 1x1 -> 2, 2x2 -> 7, 3x3 -> 63.
    EXPECT_EQ(count_language(hs, Shape::box(1, 2)), 2);
    EXPECT_EQ(count_language(hs, Shape::box(2, 2)), 7);
    EXPECT_EQ(count_language(hs, Shape::box(3, 2)), 63);
    EXPECT_EQ(count_language(hs, Shape::rect(1, 4)), 8);
}

TEST(Shifts, ShiftApply) {
    const auto x = PointedConfiguration::periodic(w("01"));
    EXPECT_EQ(shift_apply(Point::of(0), x), x);
    const auto zero = PointedConfiguration::constant(1, 0);
    EXPECT_EQ(shift_apply(Point::of(5), zero), zero);
    const auto y = shift_apply(Point::of(1), x);
    EXPECT_EQ(y.at(0), 1);
    for (coord_t h = -6; h <= 6; ++h) EXPECT_EQ(y.at(h), x.at(h - 1));
    const auto patched = zero.with_patch(Pattern::word(2, w("11")));
    const auto moved = shift_apply(Point::of(-3), patched);
    for (coord_t h = -8; h <= 8; ++h) EXPECT_EQ(moved.at(h), patched.at(h + 3));
}

TEST(Shifts, Homoclinic) {
    const auto zero = PointedConfiguration::constant(1, 0);
    const auto single = zero.with_patch(Pattern::word(0, w("1")));
    auto h = homoclinic(zero, single);
    ASSERT_TRUE(h.homoclinic);
    EXPECT_EQ(*h.witness, Shape::of({0}));
    EXPECT_FALSE(homoclinic(zero, PointedConfiguration::periodic(w("01"))).homoclinic);
    // A patch and its translate agree iff the translation is trivial.
    const auto p = zero.with_patch(Pattern::word(0, w("1101")));
    EXPECT_TRUE(homoclinic(p, shift_apply(Point::of(2), p)).homoclinic);
    EXPECT_FALSE(p == shift_apply(Point::of(2), p));
    EXPECT_TRUE(p == shift_apply(Point::of(0), p));
    // Same configuration written with different periods.
    EXPECT_TRUE(PointedConfiguration::periodic(w("01")) == PointedConfiguration::periodic(w("0101")));
}

TEST(Shifts, SplicedConfigurations) {
    const auto c = PointedConfiguration::spliced(w("0"), 4, w("1"));
    EXPECT_EQ(c.at(3), 0);
    EXPECT_EQ(c.at(4), 1);
    EXPECT_EQ(c.at(100), 1);
    EXPECT_EQ(c.at(-100), 0);
    EXPECT_TRUE(contains(catalog_shift("one_block_of_ones.sofic"), c));
    EXPECT_FALSE(contains(catalog_shift("golden_mean.sft"), c));
    const auto d = PointedConfiguration::spliced(w("0"), 5, w("1"));
    auto h = homoclinic(c, d);
    ASSERT_TRUE(h.homoclinic);
    EXPECT_EQ(*h.witness, Shape::of({4}));
}

TEST(Shifts, Membership) {
    const auto golden = catalog_shift("golden_mean.sft");
    const auto one = catalog_shift("one_block_of_ones.sofic");
    const auto zero = PointedConfiguration::constant(1, 0);
    EXPECT_TRUE(contains(golden, PointedConfiguration::periodic(w("01"))));
    EXPECT_FALSE(contains(golden, PointedConfiguration::periodic(w("011"))));
    EXPECT_TRUE(contains(one, zero.with_patch(Pattern::word(3, w("111")))));
    EXPECT_FALSE(contains(one, zero.with_patch(Pattern::word(3, w("101")))));
    EXPECT_FALSE(contains(one, PointedConfiguration::periodic(w("01"))));
    EXPECT_TRUE(contains(one, PointedConfiguration::constant(1, 1)));
    EXPECT_THROW(require_member(golden, PointedConfiguration::constant(1, 1)), InputError);
    const auto hs = catalog_shift("hard_square.sft");
    EXPECT_TRUE(contains(hs, PointedConfiguration::periodic2d(2, 2, w("1001"))));
    EXPECT_FALSE(contains(hs, PointedConfiguration::periodic2d(1, 2, w("10"))));
}

TEST(Shifts, Joinable) {
    const auto full = catalog_shift("full2.sft");
    const auto golden = catalog_shift("golden_mean.sft");
    const auto one = catalog_shift("one_block_of_ones.sofic");
    EXPECT_TRUE(joinable(full, Pattern::word(0, w("11")), Pattern::word(2, w("11"))));
    EXPECT_TRUE(joinable(golden, Pattern::word(0, w("1")), Pattern::word(2, w("1"))));
    EXPECT_FALSE(joinable(golden, Pattern::word(0, w("1")), Pattern::word(1, w("1"))));
    // A completed 1-block followed later by another 1.
    for (coord_t n = 2; n <= 12; ++n)
        EXPECT_FALSE(joinable(one, Pattern::word(0, w("10")), Pattern::word(n, w("1")))) << n;
    // Two isolated 1s can still be joined by filling 1s in between.
    EXPECT_TRUE(joinable(one, Pattern::word(0, w("1")), Pattern::word(6, w("1"))));
    EXPECT_THROW(joinable(golden, Pattern::word(0, w("1")), Pattern::word(0, w("1"))), InputError);
    auto j = join_patterns(golden, {Pattern::word(0, w("1")), Pattern::word(4, w("1"))});
    ASSERT_TRUE(j.has_value());
    EXPECT_EQ(j->values().size(), 5u);
    EXPECT_EQ(str(j->values()).find("11"), std::string::npos);
}

TEST(Shifts, SeparatingElement) {
    const auto zero = PointedConfiguration::constant(1, 0);
    EXPECT_FALSE(separating_element(zero, zero).has_value());
    const auto y = zero.with_patch(Pattern::word(7, w("1")));
    auto g = separating_element(zero, y);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, Point::of(-7));
    // (g x)(0) = x(-g): the shifted points differ at the origin.
    EXPECT_NE(shift_apply(*g, zero).at(0), shift_apply(*g, y).at(0));
    const auto a = PointedConfiguration::periodic(w("001")), b = PointedConfiguration::periodic(w("01"));
    auto h = separating_element(a, b);
    ASSERT_TRUE(h.has_value());
    EXPECT_LT(std::abs((*h)[0]), 6 + 1);
    EXPECT_NE(shift_apply(*h, a).at(0), shift_apply(*h, b).at(0));
    EXPECT_EQ(expansiveness_entourage(catalog_shift("golden_mean.sft")).window, Shape::of({0}));
}

TEST(Shifts, LanguageDifference) {
    const auto full = catalog_shift("full2.sft");
    const auto golden = catalog_shift("golden_mean.sft");
    EXPECT_FALSE(language_difference(golden, full).has_value());
    auto d = language_difference(full, golden);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(str(*d), "11");
    EXPECT_TRUE(same_language(golden, shift_from_string("format sft-v1\nalphabet 0 1\ndim 1\nforbidden 11\nforbidden 111\n")));
}

TEST(Shifts, EmptyShiftRejected) {
    EXPECT_THROW(shift_from_string("format sft-v1\nalphabet 0 1\ndim 1\nforbidden 0\nforbidden 1\n"), InputError);
}
