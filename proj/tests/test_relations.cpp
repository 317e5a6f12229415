#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <shiftlab/relations.hpp>

using namespace shiftlab;

namespace {

// Subset-enumeration oracles for sep / spa / cov of a relation on n <= 10 points.
std::size_t brute_sep(const Relation& r) {
    const std::size_t n = r.size();
    std::size_t best = 0;
    for (Mask z = 0; z < (Mask{1} << n); ++z) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                if (a != b && ((z >> a) & 1) && ((z >> b) & 1) && r.test(a, b)) ok = false;
        if (ok) best = std::max(best, static_cast<std::size_t>(std::popcount(z)));
    }
    return best;
}

std::size_t brute_spa(const Relation& r) {
    const std::size_t n = r.size();
    std::size_t best = n;
    for (Mask z = 0; z < (Mask{1} << n); ++z) {
        Mask covered = 0;
        for (std::size_t a = 0; a < n; ++a)
            if ((z >> a) & 1) covered |= r.row(a);
        if (covered == low_bits(n)) best = std::min(best, static_cast<std::size_t>(std::popcount(z)));
    }
    return best;
}

// Fewest blocks, each a set of mutually related points; exhaustive over block assignments.
std::size_t brute_cov(const Relation& r) {
    const std::size_t n = r.size();
    std::vector<Mask> cliques;
    for (Mask z = 1; z < (Mask{1} << n); ++z) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                if (((z >> a) & 1) && ((z >> b) & 1) && !r.test(a, b)) ok = false;
        if (ok) cliques.push_back(z);
    }
    std::size_t best = n;
    auto rec = [&](auto&& self, Mask covered, std::size_t used) -> void {
        if (used >= best) return;
        if (covered == low_bits(n)) {
            best = used;
            return;
        }
        const auto x = static_cast<std::size_t>(std::countr_zero(~covered));
        for (Mask c : cliques)
            if ((c >> x) & 1) self(self, covered | c, used + 1);
    };
    rec(rec, 0, 0);
    return best;
}

Relation random_relation(std::mt19937& rng, std::size_t n, int pct) {
    Relation r = Relation::identity(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (static_cast<int>(rng() % 100) < pct) r.set(x, y);
    return r;
}

}  // namespace

TEST(Relations, CompositionLaws) {
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 9;
        const Relation u = random_relation(rng, n, 30), v = random_relation(rng, n, 30), w = random_relation(rng, n, 30);
        EXPECT_EQ(compose(Relation::identity(n), v), v);
        EXPECT_EQ(compose(u, Relation::identity(n)), u);
        EXPECT_EQ(compose(compose(u, v), w), compose(u, compose(v, w)));
        EXPECT_EQ(inverse(compose(u, v)), compose(inverse(v), inverse(u)));
        EXPECT_EQ(inverse(inverse(u)), u);
        // (x, y) in U o V iff some z has (x, z) in V and (z, y) in U.
        const Relation uv = compose(u, v);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                bool any = false;
                for (std::size_t z = 0; z < n; ++z) any = any || (v.test(x, z) && u.test(z, y));
                EXPECT_EQ(uv.test(x, y), any);
            }
    }
}

TEST(Relations, Inverse) {
    EXPECT_EQ(inverse(Relation::identity(4)), Relation::identity(4));
    const Relation sym = Relation::identity(3) | Relation::from_pairs(3, {{0, 1}, {1, 0}});
    EXPECT_EQ(inverse(sym), sym);
    EXPECT_EQ(inverse(Relation::identity(2) | Relation::from_pairs(2, {{0, 1}})),
              Relation::identity(2) | Relation::from_pairs(2, {{1, 0}}));
}

TEST(Relations, PullbackMatchesDoubleLoop) {
    std::mt19937 rng(11);
    const Perm a{1, 2, 3, 0, 5, 6, 7, 4}, b{4, 5, 6, 7, 0, 1, 2, 3};
    const auto sys = FiniteDynSystem::finite(8, {a, b});
    const Relation u = random_relation(rng, 8, 25);
    EXPECT_EQ(pullback(u, {0}, sys), u);
    EXPECT_EQ(pullback(Relation::identity(8), {1, 2, 3}, sys), Relation::identity(8));
    std::vector<GroupElem> f{0, 2, 5};
    const Relation pb = pullback(u, f, sys);
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) {
            bool all = true;
            for (GroupElem g : f) all = all && u.test(static_cast<std::size_t>(sys.act(g, static_cast<int>(x))),
                                                      static_cast<std::size_t>(sys.act(g, static_cast<int>(y))));
            EXPECT_EQ(pb.test(x, y), all);
        }
}

TEST(Relations, QuantitiesAgreeWithEnumeration) {
    std::mt19937 rng(5);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = 1 + rng() % 9;
        const Relation r = random_relation(rng, n, static_cast<int>(rng() % 60));
        EXPECT_EQ(max_separated(r), brute_sep(r));
        EXPECT_EQ(min_spanning(r), brute_spa(r));
        EXPECT_EQ(min_cover(r), brute_cov(r));
    }
}

TEST(Relations, ExtremeEntourages) {
    const auto sys = FiniteDynSystem::integers(5, Perm{1, 2, 3, 4, 0});
    const Relation full = Relation::full(5), diag = Relation::identity(5);
    EXPECT_EQ(sep(sys, {0}, full), 1u);
    EXPECT_EQ(spa(sys, {0}, full), 1u);
    EXPECT_EQ(cov(sys, {0}, full), 1u);
    EXPECT_EQ(sep(sys, {0}, diag), 5u);
    EXPECT_EQ(spa(sys, {0}, diag), 5u);
    EXPECT_EQ(cov(sys, {0}, diag), 5u);
}

TEST(Relations, EquivalenceClassesForceAllThree) {
    const Relation u = Relation::from_partition({0, 0, 1, 2, 2, 2});
    EXPECT_EQ(class_count(u), 3u);
    const auto sys = FiniteDynSystem::integers(6, Perm{0, 1, 2, 3, 4, 5});
    EXPECT_EQ(sep(sys, {0}, u), 3u);
    EXPECT_EQ(spa(sys, {0}, u), 3u);
    EXPECT_EQ(cov(sys, {0}, u), 3u);
}

TEST(Relations, CapIsExplicit) {
    Perm id(20);
    for (int i = 0; i < 20; ++i) id[static_cast<std::size_t>(i)] = i;
    const auto sys = FiniteDynSystem::integers(20, id);
    EXPECT_THROW(sep(sys, {0}, Relation::identity(20)), CapExceeded);
    EXPECT_EQ(sep(sys, {0}, Relation::identity(20), SearchLimits{20}), 20u);
}

TEST(Relations, ChainTrivialAndHypotheses) {
    const auto sys = FiniteDynSystem::integers(4, Perm{1, 2, 3, 0});
    const auto c = check_chain(sys, {0, 1}, Relation::full(4), Relation::full(4));
    EXPECT_TRUE(c.all_hold());
    for (auto v : c.values) EXPECT_EQ(v, 1u);
    const Relation u = Relation::identity(4) | Relation::from_pairs(4, {{0, 1}});
    EXPECT_THROW(check_chain(sys, {0}, u, u), HypothesisError);
    EXPECT_THROW(check_chain(sys, {0}, Relation(4), Relation::full(4)), HypothesisError);
}

TEST(Relations, SweepsFindNoViolations) {
    const auto rep = chain_sweep(60, 1);
    EXPECT_EQ(rep.instances, 60u);
    EXPECT_EQ(rep.total_violations(), 0u);
    const auto eq = equivalence_sweep(30, 2);
    EXPECT_EQ(eq.mismatches, 0u);
}

TEST(Relations, SweepIsDeterministic) {
    const auto a = chain_sweep(20, 42), b = chain_sweep(20, 42);
    EXPECT_EQ(a.instances, b.instances);
    EXPECT_EQ(a.total_violations(), b.total_violations());
}

TEST(Relations, Expansiveness) {
    const auto sys = FiniteDynSystem::integers(2, Perm{0, 1});
    EXPECT_TRUE(is_expansive(sys, Relation::identity(2)));
    EXPECT_FALSE(is_expansive(sys, Relation::full(2)));
    EXPECT_FALSE(is_expansive(sys, Relation::identity(2) | Relation::from_pairs(2, {{0, 1}, {1, 0}})));
    const auto rot = FiniteDynSystem::integers(3, Perm{1, 2, 0});
    // U0 merges 1 and 2, but rotating the pair moves it out of U0.
    const Relation u0 = Relation::identity(3) | Relation::from_pairs(3, {{1, 2}, {2, 1}});
    EXPECT_TRUE(is_expansive(rot, u0));
}

TEST(Relations, TwoPointSystem) {
    const auto r = two_point_counterexample();
    EXPECT_TRUE(r.equivariant);
    EXPECT_FALSE(r.injective);
    EXPECT_TRUE(r.pre_injective);
    EXPECT_FALSE(r.surjective);
}

TEST(Relations, ParseFiniteSystem) {
    std::istringstream in("n=4\ngroup z\ngen s (0 1 2 3)\nentourage U (0,1) (1,0)  # near\n");
    const auto f = parse_finite_system(in);
    EXPECT_EQ(f.system.kind(), GroupKind::integers);
    EXPECT_EQ(f.system.period(), 4u);
    EXPECT_EQ(f.system.act(1, 3), 0);
    const auto& u = f.entourages.at("U");
    EXPECT_TRUE(u.reflexive());
    EXPECT_TRUE(u.test(0, 1));
    EXPECT_FALSE(u.test(0, 2));

    std::istringstream bad("n=3\ngen a (0 5)\n");
    EXPECT_THROW(parse_finite_system(bad), InputError);
    std::istringstream grp("n=3\ngen a (0 1)\ngen b (1 2)\n");
    EXPECT_EQ(parse_finite_system(grp).system.group_order(), 6u);
}
