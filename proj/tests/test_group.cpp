#include "cubegal/cube.hpp"
#include "cubegal/group.hpp"
#include "cubegal/wreath.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cubegal;

namespace {

GroupHandle symmetric(std::size_t n)
{
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{2});
    cyc.back() = 1;
    return GroupHandle::build({parse_cycles("(1 2)", n), Permutation::from_images(cyc)});
}

}  // namespace

TEST(Build, SmallGroups)
{
    EXPECT_EQ(GroupHandle::build({parse_cycles("(1 2)", 2)}).order(), 2);
    EXPECT_EQ(GroupHandle::build({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}).order(), 6);
    EXPECT_EQ(GroupHandle::build({Permutation(4)}).order(), 1);
    EXPECT_THROW(GroupHandle::build({Permutation(3), Permutation(4)}), std::invalid_argument);
    EXPECT_THROW(GroupHandle::build({}), std::invalid_argument);
}

TEST(Build, SymmetricAndAlternating)
{
    EXPECT_EQ(symmetric(24).order(), factorial(24));
    auto a5 = GroupHandle::build({parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)});
    EXPECT_EQ(a5.order(), 60);
    auto m = GroupHandle::build({parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 11),
                                 parse_cycles("(3 7 11 8)(4 10 5 6)", 11)});
    EXPECT_EQ(m.order(), 7920);  // Mathieu M11
}

TEST(Build, OrderIsProductOfBasicOrbits)
{
    auto g = symmetric(10);
    BigInt prod = 1;
    for (auto s : g.basic_orbit_sizes())
        prod *= static_cast<unsigned long>(s);
    EXPECT_EQ(prod, g.order());
    EXPECT_EQ(g.base().size(), g.basic_orbit_sizes().size());
}

TEST(Build, CyclicOrderEqualsElementOrder)
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 40; ++k) {
        auto p = oracle::random_perm(20, rng);
        EXPECT_EQ(GroupHandle::build({p}).order(), p.order());
    }
}

TEST(Build, SeedDoesNotChangeOrder)
{
    auto gens = r4_model().generators();
    for (std::uint64_t seed : {1u, 2u, 99u}) {
        BuildOptions o;
        o.seed = seed;
        EXPECT_EQ(GroupHandle::build(gens, o).order(),
                  BigInt("16972688908618238933770849245964147960401887232000000000"));
    }
}

TEST(Contains, Basics)
{
    auto s24 = symmetric(24);
    std::mt19937_64 rng(1);
    EXPECT_TRUE(s24.contains(Permutation(24)));
    for (int k = 0; k < 20; ++k)
        EXPECT_TRUE(s24.contains(oracle::random_perm(24, rng)));
    EXPECT_THROW(s24.contains(Permutation(23)), std::invalid_argument);

    auto a5 = GroupHandle::build({parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)});
    EXPECT_FALSE(a5.contains(parse_cycles("(1 2)", 5)));
    EXPECT_TRUE(a5.contains(parse_cycles("(1 2)(3 4)", 5)));
}

TEST(Contains, GeneratorsAndProducts)
{
    auto m = r3_model();
    auto g = build_group(m);
    auto gens = m.generators();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (const auto& x : gens)
        EXPECT_TRUE(g.contains(x));
    for (int k = 0; k < 100; ++k) {
        Permutation w(48);
        for (int j = 0; j < 12; ++j)
            w = w * (rng() % 2 ? gens[pick(rng)] : gens[pick(rng)].inverse());
        EXPECT_TRUE(g.contains(w));
    }
    // a single corner twist is not reachable
    EXPECT_FALSE(g.contains(parse_cycles("(1 9 35)", 48)));
    // swapping two edge stickers is not reachable
    EXPECT_FALSE(g.contains(parse_cycles("(2 34)", 48)));
}

TEST(Contains, ProfessorRejectsCornerStickerTransposition)
{
    auto m = r5_model();
    auto g = build_group(m);
    EXPECT_FALSE(g.contains(parse_cycles("(1 4)", 144)));
    for (const auto& x : m.generators())
        EXPECT_TRUE(g.contains(x));
}

TEST(Random, Deterministic)
{
    auto g = symmetric(12);
    EXPECT_EQ(g.random_element(42), g.random_element(42));
    EXPECT_NE(g.random_element(42), g.random_element(43));
    auto trivial = GroupHandle::build({Permutation(6)});
    for (std::uint64_t s = 0; s < 5; ++s)
        EXPECT_TRUE(trivial.random_element(s).is_identity());
}

TEST(Random, EvenFractionInS24)
{
    auto g = symmetric(24);
    int even = 0;
    const int n = 10000;
    for (int s = 0; s < n; ++s)
        even += g.random_element(static_cast<std::uint64_t>(s)).sign() == 1;
    double frac = static_cast<double>(even) / n;
    EXPECT_GE(frac, 0.45);
    EXPECT_LE(frac, 0.55);
}

TEST(Random, ElementsAreMembers)
{
    auto m = r4_model();
    auto g = build_group(m);
    for (std::uint64_t s = 0; s < 50; ++s)
        EXPECT_TRUE(g.contains(g.random_element(s)));
}

TEST(Sift, ResidueLevel)
{
    auto g = symmetric(6);
    auto r = g.sift(parse_cycles("(1 2 3)", 6));
    EXPECT_TRUE(r.residue.is_identity());
    EXPECT_EQ(r.level, g.base().size());
}

TEST(Extend, GrowsGroup)
{
    auto g = GroupHandle::build({parse_cycles("(1 2 3)", 4)});
    EXPECT_EQ(g.order(), 3);
    ASSERT_TRUE(g.extend(parse_cycles("(1 2)(3 4)", 4)));
    EXPECT_EQ(g.order(), 12);
    ASSERT_TRUE(g.extend(parse_cycles("(1 2)", 4)));
    EXPECT_EQ(g.order(), 24);
}

TEST(Orders, ProfessorDivisibleByRevenge)
{
    auto n5 = build_group(r5_model()).order();
    auto n4 = build_group(r4_model()).order();
    EXPECT_EQ(n5 % n4, 0);
}

TEST(Abelianization, KnownGroups)
{
    EXPECT_EQ(*abelianization_order(symmetric(24)), 2);
    auto a5 = GroupHandle::build({parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)});
    EXPECT_EQ(*abelianization_order(a5), 1);
    auto c6 = GroupHandle::build({parse_cycles("(1 2 3 4 5 6)", 6)});
    EXPECT_EQ(*abelianization_order(c6), 6);
    EXPECT_EQ(*abelianization_order(build_group(r3_model())), 2);
}

TEST(Abelianization, CapGivesInconclusive)
{
    EXPECT_FALSE(abelianization_order(symmetric(12), 1));
}
