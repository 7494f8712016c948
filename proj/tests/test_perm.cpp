#include "cubegal/cube_data.hpp"
#include "cubegal/perm.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cubegal;

namespace {

Permutation gen_r(std::string_view name)
{
    for (const auto& g : data::kProfessorGenerators)
        if (g.name == name)
            return parse_cycles(g.cycles, 144);
    throw std::out_of_range("no generator");
}

std::vector<Permutation> r5_gens()
{
    std::vector<Permutation> out;
    for (const auto& g : data::kProfessorGenerators)
        out.push_back(parse_cycles(g.cycles, 144));
    return out;
}

}  // namespace

TEST(Parse, SingleCycle)
{
    auto p = parse_cycles("(1 2 3)", 3);
    EXPECT_EQ(p.images(), (std::vector<Point>{2, 3, 1}));
}

TEST(Parse, EmptyWordIsIdentity)
{
    auto p = parse_cycles("", 5);
    EXPECT_TRUE(p.is_identity());
    EXPECT_EQ(p.degree(), 5u);
    EXPECT_TRUE(parse_cycles("  ()  ", 5).is_identity());
}

TEST(Parse, WhitespaceTolerant)
{
    EXPECT_EQ(parse_cycles(" ( 1  2 )\n(3 4)", 4), parse_cycles("(1 2)(3 4)", 4));
}

TEST(Parse, CyclesMustBeDisjoint)
{
    EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), std::invalid_argument);
    auto p = parse_cycles("(1 3 2)", 3);
    EXPECT_EQ(p.images(), (std::vector<Point>{3, 1, 2}));
}

TEST(Parse, Errors)
{
    EXPECT_THROW(parse_cycles("(1 6)", 5), std::invalid_argument);
    EXPECT_THROW(parse_cycles("(0 1)", 5), std::invalid_argument);
    EXPECT_THROW(parse_cycles("(1 2 1)", 5), std::invalid_argument);
    EXPECT_THROW(parse_cycles("(1 2)(2 3)(3 1", 5), std::invalid_argument);
    EXPECT_THROW(parse_cycles("1 2)", 5), std::invalid_argument);
    EXPECT_THROW(parse_cycles("((1 2))", 5), std::invalid_argument);
    EXPECT_THROW(parse_cycles("(1 x)", 5), std::invalid_argument);
}

TEST(Parse, R1HasOrderFour)
{
    auto r1 = gen_r("r1");
    EXPECT_EQ(r1.order(), 4);
    EXPECT_TRUE((r1 * r1 * r1 * r1).is_identity());
    EXPECT_FALSE((r1 * r1).is_identity());
    EXPECT_EQ(r1.image(40), 88u);
}

TEST(Compose, Convention)
{
    // (p*q)(i) = p(q(i))
    auto p = parse_cycles("(1 2)", 3), q = parse_cycles("(2 3)", 3);
    auto pq = p * q;
    for (Point i = 1; i <= 3; ++i)
        EXPECT_EQ(pq.image(i), p.image(q.image(i)));
    EXPECT_EQ(pq.image(2), 3u);
    EXPECT_EQ(pq.image(1), 2u);
    EXPECT_EQ(compose(p, q), pq);
}

TEST(Compose, TrivialCases)
{
    auto t = parse_cycles("(1 2)", 4);
    EXPECT_TRUE((t * t).is_identity());
    auto p = parse_cycles("(1 3 4)", 4);
    EXPECT_EQ(p * Permutation(4), p);
    EXPECT_EQ(Permutation(4) * p, p);
    EXPECT_THROW(p * Permutation(5), std::invalid_argument);
}

TEST(Compose, InverseAndPow)
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        auto p = oracle::random_perm(30, rng);
        EXPECT_TRUE((p * p.inverse()).is_identity());
        EXPECT_EQ(p.pow(3), p * p * p);
        EXPECT_EQ(p.pow(-2), (p * p).inverse());
        EXPECT_TRUE(p.pow(0).is_identity());
    }
}

TEST(FromImages, Validation)
{
    EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_images({1, 4, 2}), std::invalid_argument);
    EXPECT_EQ(Permutation::from_images({}).degree(), 0u);
}

TEST(Sign, Basics)
{
    EXPECT_EQ(Permutation(144).sign(), 1);
    EXPECT_EQ(parse_cycles("(1 2 3 4)", 144).sign(), -1);
    // five disjoint 4-cycles: (-1)^5
    EXPECT_EQ(gen_r("r2").sign(), -1);
    EXPECT_EQ(gen_r("r1").sign(), -1);  // eleven 4-cycles
}

TEST(Sign, Multiplicative)
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        auto p = oracle::random_perm(17, rng), q = oracle::random_perm(17, rng);
        EXPECT_EQ((p * q).sign(), p.sign() * q.sign());
        EXPECT_EQ(cycle_type(p).parity(), p.sign());
    }
}

TEST(CycleTypes, Examples)
{
    EXPECT_EQ(cycle_type(Permutation(24)).str(), "[1^24]");
    auto t = cycle_type(parse_cycles("(1 2 3)(4 5)", 6));
    EXPECT_EQ(t, CycleType({3, 2, 1}));
    auto r1 = cycle_type(gen_r("r1"));
    EXPECT_EQ(r1.count(4), 11u);
    EXPECT_EQ(r1.count(1), 100u);
    EXPECT_EQ(r1.degree(), 144u);
    EXPECT_EQ(r1.str(), "[4^11,1^100]");
}

TEST(CycleTypes, PartsSortedRegardlessOfInput)
{
    EXPECT_EQ(CycleType({1, 3, 2}), CycleType({3, 2, 1}));
    EXPECT_THROW(CycleType({0, 2}), std::invalid_argument);
}

TEST(Print, RoundTripAllProfessorGenerators)
{
    for (const auto& g : data::kProfessorGenerators) {
        auto p = parse_cycles(g.cycles, 144);
        auto text = print_cycles(p);
        EXPECT_EQ(parse_cycles(text, 144), p) << g.name;
    }
    EXPECT_EQ(print_cycles(Permutation(3)), "()");
    EXPECT_EQ(print_cycles(parse_cycles("(3 1 2)(5 4)", 6)), "(1 2 3)(4 5)");
}

TEST(Orbits, Examples)
{
    std::vector<Permutation> id{Permutation(5)};
    EXPECT_EQ(orbits(id).size(), 5u);
    std::vector<Permutation> s3{parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3)};
    auto o = orbits(s3);
    ASSERT_EQ(o.size(), 1u);
    EXPECT_EQ(o[0], (PointSet{1, 2, 3}));
    EXPECT_THROW(orbits(std::vector<Permutation>{}), std::invalid_argument);
    EXPECT_EQ(orbits(std::vector<Permutation>{}, 3).size(), 3u);
}

TEST(Orbits, ProfessorCubeMatchesBfsOracle)
{
    auto gens = r5_gens();
    auto got = orbits(gens);
    auto want = oracle::orbits_bfs(gens, 144);
    std::sort(want.begin(), want.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, want);
    // The wing stickers split into two mirror-image orbits, so there are six
    // orbits of 24 rather than five.
    ASSERT_EQ(got.size(), 6u);
    for (const auto& orb : got)
        EXPECT_EQ(orb.size(), 24u);
}

TEST(Orbits, DegreeMismatch)
{
    std::vector<Permutation> g{Permutation(3), Permutation(4)};
    EXPECT_THROW(orbits(g), std::invalid_argument);
}

TEST(Blocks, CyclicGroupOnFour)
{
    std::vector<Permutation> c4{parse_cycles("(1 2 3 4)", 4)};
    auto b = block_system(c4, PointSet{1, 2, 3, 4}, {1, 3});
    ASSERT_TRUE(b);
    EXPECT_EQ(*b, (Partition{{1, 3}, {2, 4}}));
    // seed (1,2) closes up to the whole orbit
    EXPECT_FALSE(block_system(c4, PointSet{1, 2, 3, 4}, {1, 2}));
}

TEST(Blocks, SymmetricGroupIsPrimitive)
{
    std::vector<Permutation> s3{parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
    for (auto seed : {std::pair<Point, Point>{1, 2}, {1, 3}, {2, 3}})
        EXPECT_FALSE(block_system(s3, PointSet{1, 2, 3}, seed));
}

TEST(Blocks, SeedOutsideOrbit)
{
    std::vector<Permutation> c{parse_cycles("(1 2)", 4)};
    EXPECT_THROW(block_system(c, PointSet{1, 2}, {1, 3}), std::invalid_argument);
}

TEST(Blocks, ProfessorCornerCubies)
{
    auto gens = r5_gens();
    PointSet corner_orbit;
    for (const auto& o : orbits(gens))
        if (std::binary_search(o.begin(), o.end(), Point{1}))
            corner_orbit = o;
    ASSERT_EQ(corner_orbit.size(), 24u);
    // stickers 1 (F, top-left) and 85 (U, bottom-left) sit on one corner
    auto b = block_system(gens, corner_orbit, {1, 85});
    ASSERT_TRUE(b);
    EXPECT_EQ(b->size(), 8u);
    for (const auto& blk : *b) {
        EXPECT_EQ(blk.size(), 3u);
        for (const auto& g : gens) {
            PointSet img;
            for (Point s : blk)
                img.push_back(g.image(s));
            std::sort(img.begin(), img.end());
            EXPECT_TRUE(std::find(b->begin(), b->end(), img) != b->end());
        }
    }
}

TEST(Blocks, RefineOrbits)
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        std::vector<Permutation> gens{oracle::random_perm(12, rng)};
        for (const auto& orb : orbits(gens)) {
            if (orb.size() < 2)
                continue;
            auto b = block_system(gens, orb, {orb[0], orb[1]});
            if (!b)
                continue;
            PointSet all;
            for (const auto& blk : *b) {
                EXPECT_EQ(orb.size() % blk.size(), 0u);
                EXPECT_EQ(blk.size(), b->front().size());
                all.insert(all.end(), blk.begin(), blk.end());
            }
            std::sort(all.begin(), all.end());
            EXPECT_EQ(all, orb);
        }
    }
}
