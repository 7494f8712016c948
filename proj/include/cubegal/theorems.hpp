#pragma once
// The explicit polynomials realizing the Rubik's, Revenge and Professor's
// cube groups, the parameter derivations behind them, and the check suites
// run by the verifier.
//
// Sign convention: a polynomial written X^24 + C (X + 1) is handled as the
// trinomial X^24 - u (X + 1) with u = -C. Every square-class statement is
// made about u, which enters the discriminant to an odd power.

#include "cubegal/cube.hpp"
#include "cubegal/galois.hpp"
#include "cubegal/group.hpp"
#include "cubegal/poly_q.hpp"
#include "cubegal/rational.hpp"
#include "cubegal/report.hpp"
#include "cubegal/wreath.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cubegal {

namespace orders {
inline const BigInt& rubik()
{
    static const BigInt v("43252003274489856000", 10);
    return v;
}
inline const BigInt& revenge()
{
    static const BigInt v("16972688908618238933770849245964147960401887232000000000", 10);
    return v;
}
inline const BigInt& professor()
{
    static const BigInt v("2582636272886959379162819698174683585918088940054237132"
                          "144778804568925405184000000000000000",
                          10);
    return v;
}
}  // namespace orders

namespace polys {

/// Degree-24 polynomial with group (C_3 wr S_8)^o (descending coefficients as published).
inline PolyQ rubik_f()
{
    const long desc[] = {1,       0,      -24,     8,       252,    -168,   -1484, -627,  26628,
                         -97918,  199671, -266679, 234997,  -114681, -10107, 63686, -45384, 6819,
                         12880,   -12096, 5502,    -1504,   252,     -24,    1};
    std::vector<BigRational> c;
    for (auto it = std::rbegin(desc); it != std::rend(desc); ++it)
        c.emplace_back(*it);
    return PolyQ(std::move(c));
}

inline BigRational rubik_g_constant()
{
    return BigRational::parse("3852443469645611961262219752967766016/384257037754753807138505851908147025");
}

/// X^24 + C (X^2 + 1), group (C_2 wr S_12)^o.
inline PolyQ rubik_g()
{
    const BigRational C = rubik_g_constant();
    return PolyQ::monomial(1, 24) + PolyQ::monomial(C, 2) + PolyQ::constant(C);
}

inline BigInt q_const() { return factored_constant({{31, 1}, {281, 1}, {1201, 1}, {70529, 1}, {BigInt("9801219477271"), 1}}); }

/// Published coefficient C of the Revenge theorem's g = X^24 + C (X + 1).
inline BigRational revenge_g_constant() { return parse_rational_expr("2^67*3^24/(23^23*31*281*1201*70529*9801219477271)"); }
inline PolyQ revenge_g() { return nart_vila_trinomial(-revenge_g_constant()); }

/// X^24 - X - 1.
inline PolyQ revenge_h() { return nart_vila_trinomial(1); }

/// Published h_1 constant (X^24 + C (X + 1)).
inline BigRational professor_h1_literal_constant()
{
    return parse_rational_expr("2^64*3^23/(23^23*31*281*1201*70529*9801219477271)");
}
/// Published h_2 = X^24 - u_2 (X + 1).
inline BigRational professor_u2_literal()
{
    return parse_rational_expr("2^75*3^14*31*281*1201*70529*9801219477271/(7^2*23^22*195574568093355782014153^2)");
}
/// Published h_3 = X^24 - u_3 (X + 1).
inline BigRational professor_u3_literal() { return parse_rational_expr("2^72*3^24*7*1437417619559484462138047/23^22"); }

}  // namespace polys

/// Constants and derived specializations of the trinomial family.
struct TheoremParameters {
    BigInt c;            // 1437417619559484462138047
    BigInt seven_c;      // target square class 7c
    BigInt q_const;      // 31*281*1201*70529*9801219477271
    BigInt z;            // 14464014796817312400264098
    BigInt r;            // 1
    BigInt v1;           // 1
    BigInt v3;           // 7c
    BigInt p2;           // 195574568093355782014153
    BigInt s;            // 1
    BigRational t;       // t(s)
    BigRational u1;      // t(v1)
    BigRational w;       // 2r / (23 z - r^2)
    BigRational v2;      // z w^2
    BigRational u2;      // v2 24^24 / 23^22
    BigRational u3;      // v3 24^24 / 23^22
};

/// t(s) = (24^24 / 23^23) * -1 / (23 * 7c * s^2 + 1).
inline BigRational nart_vila_parameter(const BigInt& seven_c, const BigRational& s)
{
    BigRational lead(big_pow(24, 24), big_pow(23, 23));
    return lead * BigRational(-1) / (BigRational(23 * seven_c) * s * s + BigRational(1));
}

/// Computes every derived parameter and verifies the exact identities
/// linking them. Throws std::logic_error when an identity fails.
inline TheoremParameters derive_parameters()
{
    TheoremParameters P;
    P.c = BigInt("1437417619559484462138047");
    P.seven_c = 7 * P.c;
    P.q_const = polys::q_const();
    P.z = BigInt("14464014796817312400264098");
    P.r = 1;
    P.v1 = 1;
    P.v3 = P.seven_c;
    P.p2 = BigInt("195574568093355782014153");
    P.s = 1;

    const BigInt lhs = 23 * P.seven_c + 1;
    if (lhs != 32 * P.q_const || lhs != 16 * P.z)
        throw std::logic_error("23*7c + 1 = 32*Q = 16*z fails");
    if (23 * P.z - P.r * P.r != 243 * 7 * P.p2)
        throw std::logic_error("23 z - r^2 = 3^5 * 7 * p2 fails");

    P.t = nart_vila_parameter(P.seven_c, BigRational(P.s));
    P.u1 = nart_vila_parameter(P.seven_c, BigRational(P.v1));
    P.w = BigRational(2 * P.r, 23 * P.z - P.r * P.r);
    P.v2 = BigRational(P.z) * P.w * P.w;
    const BigRational scale(big_pow(24, 24), big_pow(23, 22));
    P.u2 = P.v2 * scale;
    P.u3 = BigRational(P.v3) * scale;

    const BigRational ratio = BigRational(23 * P.z + P.r * P.r, 23 * P.z - P.r * P.r);
    if (BigRational(23) * P.v2 + BigRational(1) != ratio * ratio)
        throw std::logic_error("23 v2 + 1 = ((23z + r^2)/(23z - r^2))^2 fails");
    return P;
}

enum class Theorem { rubik, revenge, professor };

struct SuiteOptions {
    std::size_t scan_primes = 500;
    std::size_t linkage_primes = 300;
    std::size_t triple_linkage_primes = 200;
    std::size_t certify_primes = 2000;
    unsigned jobs = 1;
    bool timings = false;
    std::uint64_t seed = BuildOptions{}.seed;
};

namespace suite {

inline const char* kRubikThm = "Rubik theorem: Gal(fg) = R3 for f and g = X^24 + C(X^2+1)";
inline const char* kRevengeThm = "Revenge theorem: g = X^24 + 2^67 3^24/(23^23 Q)(X+1), h = X^24 - X - 1";
inline const char* kRevengeProof = "Revenge proof: t = (24^24/23^23) * -1/(23*7c*s^2 + 1), disc g = 7c mod squares";
inline const char* kProfessorThm = "Professor theorem: h1, h2, h3 = X^24 - u_i(X+1)";
inline const char* kDisch1 = "Professor proof: disc h1 = (-1)(23^23 u1 + 24^24) u1^23 = 7c mod squares";
inline const char* kDisch23 = "Professor proof: disc h2 disc h3 = 7c mod squares";
inline const char* kParams = "Professor proof: v2 = z w^2, w = 2r/(23z - r^2), z = 14464014796817312400264098";
inline const char* kOrders = "group orders |R3|, |R4|, |R5| = |R3| (24!)^3 / 4";
inline const char* kStructure = "structure: fiber products over sign of restricted wreath products";
inline const char* kGenerators = "Professor's cube generators r1..f2";
inline const char* kCertify = "Gal = S24 for the trinomials: transitive, primitive, prime cycle, disc nonsquare";
inline const char* kValidity = "Professor's cube validity conditions: sum x = 0, sum y = 0, sign conditions";

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline void expect_bool(CheckReport& r, bool actual, bool expected = true)
{
    r.expected = yes_no(expected);
    r.actual = yes_no(actual);
    r.status = actual == expected ? CheckStatus::pass : CheckStatus::fail;
}

inline void expect_value(CheckReport& r, const std::string& expected, const std::string& actual)
{
    r.expected = expected;
    r.actual = actual;
    r.status = expected == actual ? CheckStatus::pass : CheckStatus::fail;
}

inline std::string types_outside(const EvidenceProfile& prof, const std::set<CycleType>& allowed)
{
    std::string bad;
    for (const auto& [t, n] : prof.histogram())
        if (!allowed.count(t))
            bad += t.str() + "x" + std::to_string(n) + " ";
    return bad;
}

inline CheckReport certify_check(std::string id, const PolyQ& f, const SuiteOptions& o)
{
    return timed_check(std::move(id), kCertify, o.timings, [&](CheckReport& r) {
        r.expected = "certificate for S24";
        auto res = certify_symmetric(f, o.certify_primes, ScanOptions{o.jobs});
        if (auto* cert = std::get_if<SymmetricCertificate>(&res)) {
            std::ostringstream os;
            os << "transitive@" << cert->transitive_prime << " primitive@" << cert->primitive_prime << " "
               << cert->jordan_cycle << "-cycle@" << cert->jordan_prime << " disc nonsquare";
            r.actual = os.str();
            r.status = revalidate(f, *cert) ? CheckStatus::pass : CheckStatus::fail;
        } else {
            r.actual = "inconclusive: " + std::get<Inconclusive>(res).reason;
            r.status = CheckStatus::inconclusive;
        }
    });
}

inline CheckReport linkage_check(std::string id, const char* cite, const std::vector<const PolyQ*>& ps,
                                 std::size_t budget, bool expect_linked, const SuiteOptions& o)
{
    return timed_check(std::move(id), cite, o.timings, [&](CheckReport& r) {
        LinkageReport rep = ps.size() == 2 ? parity_linkage(*ps[0], *ps[1], budget, ScanOptions{o.jobs})
                                           : triple_parity_linkage(*ps[0], *ps[1], *ps[2], budget, ScanOptions{o.jobs});
        r.expected = expect_linked ? "0 violations" : ">= 1 violation";
        r.actual = std::to_string(rep.violations.size()) + " violations over " + std::to_string(rep.primes_checked) +
                   " primes";
        if (!rep.violations.empty())
            r.actual += " (first at p=" + std::to_string(rep.violations.front()) + ")";
        r.status = rep.linked() == expect_linked ? CheckStatus::pass : CheckStatus::fail;
    });
}

inline void rubik_checks(std::vector<CheckReport>& out, const SuiteOptions& o)
{
    const PolyQ f = polys::rubik_f(), g = polys::rubik_g();
    const bool t = o.timings;
    out.push_back(timed_check("rubik.disc-f-equals-disc-g-mod-squares", kRubikThm, t, [&](CheckReport& r) {
        const BigRational dg = discriminant(g);
        expect_bool(r, square_class_equal(discriminant(f), dg));
        if (is_square(dg))
            r.actual += " (disc g is a square)";
    }));
    // (C_2 wr S_12)^o is even on 24 points, so disc g is always a square; its
    // sign character is the parity of the block action, read off from g12
    // with g(X) = g12(X^2).
    const PolyQ g12 = even_part(g);
    out.push_back(timed_check("rubik.disc-f-equals-disc-g12-mod-squares", kRubikThm, t, [&](CheckReport& r) {
        expect_bool(r, square_class_equal(discriminant(f), discriminant(g12)));
    }));
    out.push_back(timed_check("rubik.disc-f-in-class-7c", kRevengeProof, t, [&](CheckReport& r) {
        expect_bool(r, square_class_equal(discriminant(f), BigRational(derive_parameters().seven_c)));
    }));
    out.push_back(timed_check("rubik.f-types-in-wreath-3-8", kStructure, t, [&](CheckReport& r) {
        auto prof = scan(f, o.scan_primes, ScanOptions{o.jobs}, "f");
        std::string bad = types_outside(prof, predict_wreath_types(3, 8));
        r.expected = "all types in (C3 wr S8)^o over " + std::to_string(o.scan_primes) + " good primes";
        r.actual = bad.empty() ? "inside at all " + std::to_string(prof.observed.size()) + " primes" : "outside: " + bad;
        r.status = bad.empty() ? CheckStatus::pass : CheckStatus::fail;
    }));
    out.push_back(timed_check("rubik.f-no-irreducible-reduction", kStructure, t, [&](CheckReport& r) {
        auto prof = scan(f, o.scan_primes, ScanOptions{o.jobs}, "f");
        std::size_t n = prof.histogram()[CycleType({24})];
        expect_value(r, "0", std::to_string(n));
    }));
    out.push_back(timed_check("rubik.g-types-in-wreath-2-12", kStructure, t, [&](CheckReport& r) {
        auto prof = scan(g, o.scan_primes, ScanOptions{o.jobs}, "g");
        std::string bad = types_outside(prof, predict_wreath_types(2, 12));
        r.expected = "all types in (C2 wr S12)^o over " + std::to_string(o.scan_primes) + " good primes";
        r.actual = bad.empty() ? "inside at all " + std::to_string(prof.observed.size()) + " primes" : "outside: " + bad;
        r.status = bad.empty() ? CheckStatus::pass : CheckStatus::fail;
    }));
    out.push_back(linkage_check("rubik.parity-linkage-f-g", kRubikThm, {&f, &g}, o.linkage_primes, true, o));
    out.push_back(linkage_check("rubik.parity-linkage-f-g12", kRubikThm, {&f, &g12}, o.linkage_primes, true, o));
    out.push_back(timed_check("rubik.r3-order", kOrders, t, [&](CheckReport& r) {
        BuildOptions bo;
        bo.seed = o.seed;
        expect_value(r, to_string(orders::rubik()), to_string(build_group(r3_model(), bo).order()));
    }));
    out.push_back(timed_check("rubik.r3-structure-order", kStructure, t, [&](CheckReport& r) {
        expect_value(r, to_string(orders::rubik()), to_string(r3_predicted_order()));
    }));
    out.push_back(timed_check("rubik.superflip-central", kStructure, t, [&](CheckReport& r) {
        auto m = r3_model();
        auto group = build_group(m);
        Permutation sf = superflip_stickers(m);
        bool ok = group.contains(sf) && sf.order() == 2;
        for (const auto& g : m.generators())
            ok = ok && sf * g == g * sf;
        expect_bool(r, ok);
    }));
    out.push_back(timed_check("rubik.abelianization-order", kStructure, t, [&](CheckReport& r) {
        auto a = abelianization_order(build_group(r3_model()));
        if (!a) {
            r.status = CheckStatus::inconclusive;
            r.expected = "2";
            r.actual = "strong generator cap exceeded";
            return;
        }
        expect_value(r, "2", to_string(*a));
    }));
}

inline void revenge_checks(std::vector<CheckReport>& out, const SuiteOptions& o)
{
    const bool t = o.timings;
    const PolyQ f = polys::rubik_f(), g = polys::revenge_g(), h = polys::revenge_h();
    out.push_back(timed_check("revenge.g-coefficient-from-t", kRevengeProof, t, [&](CheckReport& r) {
        auto P = derive_parameters();
        expect_value(r, (-polys::revenge_g_constant()).str(), P.t.str());
    }));
    out.push_back(timed_check("revenge.disc-g-in-class-7c", kRevengeProof, t, [&](CheckReport& r) {
        auto P = derive_parameters();
        BigRational d = trinomial_disc(-polys::revenge_g_constant());
        bool closed_form = d == discriminant(g);
        expect_bool(r, closed_form && square_class_equal(d, BigRational(P.seven_c)));
    }));
    out.push_back(timed_check("revenge.disc-h-closed-form", kRevengeThm, t, [&](CheckReport& r) {
        BigRational expected = -BigRational(big_pow(23, 23) + big_pow(24, 24));
        expect_value(r, expected.str(), discriminant(h).str());
        if (r.status == CheckStatus::pass && trinomial_disc(1) != expected)
            r.status = CheckStatus::fail;
    }));
    out.push_back(timed_check("revenge.disc-h-outside-class-7c", kRevengeThm, t, [&](CheckReport& r) {
        expect_bool(r, square_class_equal(discriminant(h), BigRational(derive_parameters().seven_c)), false);
    }));
    out.push_back(linkage_check("revenge.parity-linkage-f-g", kRevengeProof, {&f, &g}, o.linkage_primes, true, o));
    out.push_back(certify_check("revenge.certify-g-symmetric", g, o));
    out.push_back(certify_check("revenge.certify-h-symmetric", h, o));
    out.push_back(timed_check("revenge.fiber-order", kStructure, t, [&](CheckReport& r) {
        expect_value(r, to_string(orders::revenge()), to_string(r4_predicted_order()));
    }));
    out.push_back(timed_check("revenge.r4-order", kOrders, t, [&](CheckReport& r) {
        BuildOptions bo;
        bo.seed = o.seed;
        expect_value(r, to_string(orders::revenge()), to_string(build_group(r4_model(), bo).order()));
    }));
}

inline void professor_checks(std::vector<CheckReport>& out, const SuiteOptions& o)
{
    const bool t = o.timings;
    const TheoremParameters P = derive_parameters();
    const BigRational target(P.seven_c);
    const BigRational u1_literal = -polys::professor_h1_literal_constant();
    const PolyQ f = polys::rubik_f();
    const PolyQ h1 = nart_vila_trinomial(P.u1), h1_lit = nart_vila_trinomial(u1_literal);
    const PolyQ h2 = nart_vila_trinomial(polys::professor_u2_literal());
    const PolyQ h3 = nart_vila_trinomial(polys::professor_u3_literal());

    out.push_back(timed_check("professor.parameter-identities", kParams, t, [&](CheckReport& r) {
        // derive_parameters() already threw if any identity failed
        BigRational v = BigRational(23) * P.v2 + BigRational(1);
        expect_bool(r, 23 * P.seven_c + 1 == 32 * P.q_const && 32 * P.q_const == 16 * P.z &&
                           23 * P.z - 1 == 243 * 7 * P.p2 && is_square(v));
    }));
    out.push_back(timed_check("professor.u2-coefficient", kProfessorThm, t, [&](CheckReport& r) {
        expect_value(r, polys::professor_u2_literal().str(), P.u2.str());
    }));
    out.push_back(timed_check("professor.u3-coefficient", kProfessorThm, t, [&](CheckReport& r) {
        expect_value(r, polys::professor_u3_literal().str(), P.u3.str());
    }));
    out.push_back(timed_check("professor.h1-derived.disc-class", kDisch1, t, [&](CheckReport& r) {
        BigRational d = trinomial_disc(P.u1);
        r.expected = "class of 7c";
        bool ok = d == discriminant(h1) && square_class_equal(d, target);
        r.actual = (ok ? "class of 7c; u1 = " : "different class; u1 = ") + P.u1.str();
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    }));
    out.push_back(timed_check("professor.h1-literal.disc-class", kDisch1, t, [&](CheckReport& r) {
        BigRational d = trinomial_disc(u1_literal);
        r.expected = "class of 7c";
        bool ok = square_class_equal(d, target);
        r.actual = std::string(ok ? "class of 7c" : "different class") + "; literal u1 = " + u1_literal.str() +
                   " = derived u1 * " + (u1_literal / P.u1).str();
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    }));
    out.push_back(timed_check("professor.disc-h2-h3-class", kDisch23, t, [&](CheckReport& r) {
        BigRational d2 = trinomial_disc(P.u2), d3 = trinomial_disc(P.u3);
        bool closed = d2 == discriminant(h2) && d3 == discriminant(h3);
        expect_bool(r, closed && square_class_equal(d2 * d3, target));
    }));
    out.push_back(certify_check("professor.certify-h1-derived", h1, o));
    out.push_back(certify_check("professor.certify-h1-literal", h1_lit, o));
    out.push_back(certify_check("professor.certify-h2", h2, o));
    out.push_back(certify_check("professor.certify-h3", h3, o));
    out.push_back(linkage_check("professor.parity-linkage-f-h1", kDisch1, {&f, &h1}, o.linkage_primes, true, o));
    out.push_back(linkage_check("professor.triple-parity-linkage-f-h2-h3", kDisch23, {&f, &h2, &h3},
                                o.triple_linkage_primes, true, o));
    out.push_back(timed_check("professor.structure-order", kOrders, t, [&](CheckReport& r) {
        expect_value(r, to_string(orders::professor()), to_string(r5_predicted_order()));
    }));
    out.push_back(timed_check("professor.r5-order", kGenerators, t, [&](CheckReport& r) {
        BuildOptions bo;
        bo.seed = o.seed;
        expect_value(r, to_string(orders::professor()), to_string(build_group(r5_model(), bo).order()));
    }));
    out.push_back(timed_check("professor.orientation-sums", kValidity, t, [&](CheckReport& r) {
        auto m = r5_model();
        bool ok = true;
        for (const auto& g : m.named_generators())
            ok = ok && orientation_sum(m, g.perm, PieceKind::corner) == 0 &&
                 orientation_sum(m, g.perm, PieceKind::edge) == 0;
        expect_bool(r, ok);
    }));
    out.push_back(timed_check("professor.sign-image-order", kValidity, t, [&](CheckReport& r) {
        expect_value(r, "4", std::to_string(sign_image_order(r5_model())));
    }));
    out.push_back(timed_check("professor.sign-class-assignment", kValidity, t, [&](CheckReport& r) {
        auto found = consistent_sign_assignments(r5_model());
        r.expected = "at least one assignment of (tau, rho_c, rho_e)";
        r.actual.clear();
        for (const auto& a : found)
            r.actual += std::string(r.actual.empty() ? "" : " ") + "(" + std::string(kind_name(a.tau)) + ", " + std::string(kind_name(a.rho_c)) + ", " +
                        std::string(kind_name(a.rho_e)) + ")";
        if (r.actual.empty())
            r.actual = "none";
        r.status = found.empty() ? CheckStatus::fail : CheckStatus::pass;
    }));
}

}  // namespace suite

/// Runs one theorem's suite. The revenge suite includes the rubik checks.
inline std::vector<CheckReport> verify_theorem(Theorem which, const SuiteOptions& opts = {})
{
    std::vector<CheckReport> out;
    switch (which) {
    case Theorem::rubik:
        suite::rubik_checks(out, opts);
        break;
    case Theorem::revenge:
        suite::rubik_checks(out, opts);
        suite::revenge_checks(out, opts);
        break;
    case Theorem::professor:
        suite::professor_checks(out, opts);
        break;
    }
    return out;
}

}  // namespace cubegal
