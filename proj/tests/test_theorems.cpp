#include "cubegal/theorems.hpp"

#include <gtest/gtest.h>

using namespace cubegal;

namespace {

const CheckReport& find(const std::vector<CheckReport>& rs, const std::string& id)
{
    for (const auto& r : rs)
        if (r.id == id)
            return r;
    throw std::out_of_range("no check " + id);
}

SuiteOptions quick()
{
    SuiteOptions o;
    o.scan_primes = 100;
    o.linkage_primes = 100;
    o.triple_linkage_primes = 100;
    o.jobs = 4;
    return o;
}

}  // namespace

TEST(Parameters, Identities)
{
    auto P = derive_parameters();
    EXPECT_EQ(P.seven_c, BigInt("10061923336916391234966329"));
    EXPECT_EQ(P.q_const * 2, P.z);
    EXPECT_EQ(23 * P.seven_c, BigInt("231424236749076998404225567"));
    EXPECT_EQ(23 * P.z - 1, 243 * 7 * P.p2);
    EXPECT_TRUE(is_square(BigRational(23) * P.v2 + BigRational(1)));
}

TEST(Parameters, TMatchesRevengeConstant)
{
    auto P = derive_parameters();
    BigRational want = -BigRational(big_pow(2, 67) * big_pow(3, 24), big_pow(23, 23) * P.q_const);
    EXPECT_EQ(P.t, want);
    EXPECT_EQ(P.t, -polys::revenge_g_constant());
    EXPECT_EQ(P.u1, P.t);
}

TEST(Parameters, U2U3MatchProfessorConstants)
{
    auto P = derive_parameters();
    BigRational u2(big_pow(2, 75) * big_pow(3, 14) * P.q_const, 49 * big_pow(23, 22) * P.p2 * P.p2);
    EXPECT_EQ(P.u2, u2);
    EXPECT_EQ(P.u2, polys::professor_u2_literal());
    BigRational u3(P.seven_c * big_pow(2, 72) * big_pow(3, 24), big_pow(23, 22));
    EXPECT_EQ(P.u3, u3);
    EXPECT_EQ(P.u3, polys::professor_u3_literal());
}

TEST(Parameters, LiteralH1DiffersByFactor24)
{
    auto P = derive_parameters();
    BigRational lit = -polys::professor_h1_literal_constant();
    EXPECT_EQ(P.u1 / lit, BigRational(24));
    EXPECT_TRUE(square_class_equal(trinomial_disc(P.u1), BigRational(P.seven_c)));
    EXPECT_FALSE(square_class_equal(trinomial_disc(lit), BigRational(P.seven_c)));
}

TEST(Parameters, TFamilyDiscriminantClass)
{
    // disc(X^24 - t(s)(X+1)) is in class 7c for every rational s
    auto P = derive_parameters();
    for (long s : {1L, 2L, 5L, 13L})
        for (long d : {1L, 3L, 7L}) {
            BigRational sv{BigInt(s), BigInt(d)};
            EXPECT_TRUE(square_class_equal(trinomial_disc(nart_vila_parameter(P.seven_c, sv)), BigRational(P.seven_c)));
        }
}

TEST(Suites, RubikQuick)
{
    auto rs = verify_theorem(Theorem::rubik, quick());
    for (const auto& r : rs) {
        EXPECT_FALSE(r.citation.empty()) << r.id;
        if (r.id == "rubik.disc-f-equals-disc-g-mod-squares" || r.id == "rubik.parity-linkage-f-g")
            EXPECT_EQ(r.status, CheckStatus::fail) << r.id;
        else
            EXPECT_EQ(r.status, CheckStatus::pass) << r.id << ": " << r.actual;
    }
    EXPECT_EQ(find(rs, "rubik.disc-f-equals-disc-g12-mod-squares").status, CheckStatus::pass);
}

TEST(Suites, ProfessorReportsBothH1Variants)
{
    auto o = quick();
    auto rs = verify_theorem(Theorem::professor, o);
    EXPECT_EQ(find(rs, "professor.h1-derived.disc-class").status, CheckStatus::pass);
    EXPECT_EQ(find(rs, "professor.h1-literal.disc-class").status, CheckStatus::fail);
    for (const auto& r : rs)
        if (r.id != "professor.h1-literal.disc-class")
            EXPECT_EQ(r.status, CheckStatus::pass) << r.id << ": " << r.actual;
}

TEST(Suites, Deterministic)
{
    auto o = quick();
    auto a = report_json(verify_theorem(Theorem::rubik, o)).dump();
    auto b = report_json(verify_theorem(Theorem::rubik, o)).dump();
    EXPECT_EQ(a, b);
}

TEST(Report, JsonShapeAndSummary)
{
    std::vector<CheckReport> rs{{"a", CheckStatus::pass, "1", "1", "x", 0},
                                {"b", CheckStatus::fail, "1", "2", "y", 0},
                                {"c", CheckStatus::inconclusive, "", "", "z", 0}};
    auto j = report_json(rs);
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["checks"].size(), 3u);
    EXPECT_EQ(j["checks"][1]["status"], "fail");
    EXPECT_EQ(j["summary"]["pass"], 1);
    EXPECT_EQ(j["summary"]["fail"], 1);
    EXPECT_EQ(j["summary"]["inconclusive"], 1);
    EXPECT_EQ(j["summary"]["skip"], 0);
    std::vector<std::string> keys;
    for (auto it = j["checks"][0].begin(); it != j["checks"][0].end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"id", "status", "expected", "actual", "citation", "ms"}));
}

TEST(Report, TimedCheckCatches)
{
    auto r = timed_check("boom", "c", false, [](CheckReport&) { throw std::runtime_error("bad"); });
    EXPECT_EQ(r.status, CheckStatus::fail);
    EXPECT_EQ(r.actual, "error: bad");
    EXPECT_EQ(r.ms, 0);
}
