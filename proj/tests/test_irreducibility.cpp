#include <gtest/gtest.h>

#include "common.hpp"
#include "oracles.hpp"

using namespace shiftlab;
using testing_util::catalog_shift;
using testing_util::str;
using testing_util::w;

TEST(Irreducibility, DeltaIrreducible) {
    EXPECT_TRUE(delta_irreducible(catalog_shift("full2.sft"), Shape::of({0})).irreducible);
    EXPECT_TRUE(delta_irreducible(catalog_shift("golden_mean.sft"), Shape::of({-1, 0, 1})).irreducible);
    EXPECT_FALSE(delta_irreducible(catalog_shift("golden_mean.sft"), Shape::of({0})).irreducible);
    const auto p2 = catalog_shift("period2.sft");
    for (coord_t r = 0; r <= 4; ++r) {
        const auto d = delta_irreducible(p2, Shape::interval(-r, r));
        ASSERT_FALSE(d.irreducible) << r;
        const auto& f = *d.counterexample;
        // The reported pair really fails to join at the reported gap.
        const auto lw = static_cast<coord_t>(f.left.size());
        EXPECT_FALSE(joinable(p2, Pattern::word(0, f.left), Pattern::word(lw + f.gap, f.right)));
        EXPECT_GE(f.gap, r);
    }
    EXPECT_THROW(delta_irreducible(p2, Shape::of({-2, 0, 2})), InputError);
}

TEST(Irreducibility, Certificates) {
    const auto golden = strong_irreducibility(catalog_shift("golden_mean.sft"));
    EXPECT_EQ(golden.status, SiStatus::strongly_irreducible);
    EXPECT_EQ(golden.gap, 1);
    EXPECT_EQ(*golden.delta, Shape::of({-1, 0, 1}));
    EXPECT_EQ(golden.primitivity_index, 2u);

    const auto full = strong_irreducibility(catalog_shift("full2.sft"));
    EXPECT_EQ(full.status, SiStatus::strongly_irreducible);
    EXPECT_EQ(full.gap, 0);

    const auto p2 = strong_irreducibility(catalog_shift("period2.sft"));
    EXPECT_EQ(p2.status, SiStatus::not_strongly_irreducible);
    EXPECT_NE(p2.structure.find("period 2"), std::string::npos);
    ASSERT_TRUE(p2.witness.has_value());
    EXPECT_FALSE(p2.failing_gaps.empty());

    const auto one = strong_irreducibility(catalog_shift("one_block_of_ones.sofic"));
    EXPECT_EQ(one.status, SiStatus::not_strongly_irreducible);
    EXPECT_EQ(one.method, SiMethod::filler_search);
    ASSERT_TRUE(one.witness.has_value());
    // The witness fails at every gap up to the bound; check with the string oracle.
    EXPECT_EQ(one.failing_gaps.size(), static_cast<std::size_t>(one.bound + 1));
    for (coord_t m = 0; m <= one.bound; ++m) {
        const std::string left = str(one.witness->left), right = str(one.witness->right);
        bool some = false;
        for (const auto& mid : oracle::all_words(static_cast<int>(m)))
            some = some || oracle::one_block_word(left + mid + right);
        EXPECT_FALSE(some) << m;
    }
}

TEST(Irreducibility, GapIsMinimal) {
    // forbidden 11 and 101: two 1s need at least two 0s in between.
    const auto x = shift_from_string("format sft-v1\ndim 1\nalphabet 0 1\nforbidden 11\nforbidden 101\n");
    const auto c = strong_irreducibility(x);
    ASSERT_EQ(c.status, SiStatus::strongly_irreducible);
    EXPECT_EQ(c.gap, 2);
    EXPECT_FALSE(joinable(x, Pattern::word(0, w("1")), Pattern::word(2, w("1"))));
    EXPECT_TRUE(joinable(x, Pattern::word(0, w("1")), Pattern::word(3, w("1"))));
}

TEST(Irreducibility, PrimitivityAgreesWithFillerOracle) {
    // A slice of the exhaustive cross-check: all forbidden sets among words of length <= 2.
    const auto words = [] {
        std::vector<std::string> out;
        for (int n = 1; n <= 2; ++n)
            for (const auto& u : oracle::all_words(n)) out.push_back(u);
        return out;
    }();
    int checked = 0;
    for (unsigned mask = 0; mask < (1u << words.size()); ++mask) {
        std::vector<std::string> forb;
        std::string text = "format sft-v1\ndim 1\nalphabet 0 1\n";
        for (std::size_t i = 0; i < words.size(); ++i)
            if ((mask >> i) & 1) {
                forb.push_back(words[i]);
                text += "forbidden " + words[i] + "\n";
            }
        std::optional<ShiftPresentation> x;
        try {
            x = shift_from_string(text);
        } catch (const InputError&) {
            continue;  // empty shift
        }
        const bool lib = strong_irreducibility(*x).status == SiStatus::strongly_irreducible;
        EXPECT_EQ(lib, oracle::filler_search_si(forb)) << text;
        ++checked;
    }
    EXPECT_GT(checked, 20);
}

TEST(Irreducibility, SpecificationSubset) {
    EXPECT_EQ(specification_subset(Shape::of({0}), Shape::of({0})), Shape::of({0}));
    EXPECT_EQ(specification_subset(Shape::of({0}), Shape::of({-1, 0, 1})), Shape::of({-1, 0, 1}));
    EXPECT_EQ(specification_subset(Shape::of({0, 1}), Shape::of({-1, 0, 1})), Shape::interval(-2, 2));
}

TEST(Irreducibility, WspSolve) {
    const auto golden = catalog_shift("golden_mean.sft");
    const Shape lambda = Shape::of({-1, 0, 1}), omega = Shape::of({0});
    const std::vector<WspPiece> pieces{{Shape::of({0}), Pattern::word(0, w("1"))},
                                       {Shape::of({-2}), Pattern::word(2, w("1"))}};
    auto x = wsp_solve(golden, lambda, omega, pieces);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(str(x->values()), "101");
    // Adjacent pieces are not lambda-separated.
    const std::vector<WspPiece> close{{Shape::of({0}), Pattern::word(0, w("1"))},
                                      {Shape::of({-1}), Pattern::word(1, w("0"))}};
    EXPECT_THROW(wsp_solve(golden, lambda, omega, close), InputError);
    EXPECT_TRUE(wsp_solve(catalog_shift("full2.sft"), Shape::of({0}), omega, close).has_value());
}

TEST(Irreducibility, WspSweeps) {
    const WspSweepOptions small{3, 8, 2};
    const auto golden = wsp_sweep(catalog_shift("golden_mean.sft"), Shape::of({-1, 0, 1}), small);
    EXPECT_GT(golden.instances, 0u);
    EXPECT_EQ(golden.violations, 0u);
    // Lambda = {0} is too small for the golden mean: "1" next to "1" cannot be realized.
    const auto tight = wsp_sweep(catalog_shift("golden_mean.sft"), Shape::of({0}), small);
    EXPECT_GT(tight.violations, 0u);

    const auto one = wsp_sweep(catalog_shift("one_block_of_ones.sofic"), Shape::interval(-3, 3), small);
    ASSERT_GT(one.violations, 0u);
    ASSERT_TRUE(one.first_violation.has_value());
    // No word of the form 0*1*0* matches all targets of the reported family.
    const auto& targets = *one.first_violation;
    coord_t lo = 1 << 20, hi = -(1 << 20);
    for (const auto& t : targets) {
        lo = std::min(lo, t.shape().lower()[0]);
        hi = std::max(hi, t.shape().upper()[0]);
    }
    bool realizable = false;
    for (const auto& cand : oracle::all_words(static_cast<int>(hi - lo + 1))) {
        bool match = oracle::one_block_word(cand);
        for (const auto& t : targets)
            for (std::size_t i = 0; i < t.size(); ++i)
                match = match && cand[static_cast<std::size_t>(t.shape()[i][0] - lo)] == '0' + t.values()[i];
        realizable = realizable || match;
    }
    EXPECT_FALSE(realizable);
}
