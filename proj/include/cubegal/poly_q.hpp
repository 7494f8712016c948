#pragma once
// Dense univariate polynomials over Q: arithmetic, evaluation, resultant
// and discriminant, the X^n - u(X+1) trinomial closed form, and the JSON
// file format used by the CLI.
//
// Resultant sign convention (used consistently):
//     Res(f, g) = lc(g)^deg(f) * prod_{g(b)=0} f(b)
// which is (-1)^(deg f * deg g) times the Sylvester-determinant resultant.
// Hence Res(X - a, X - b) = b - a.

#include "cubegal/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubegal {

class PolyQ {
public:
    PolyQ() = default;
    /// Ascending coefficients: coeffs[k] multiplies X^k.
    explicit PolyQ(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    PolyQ(std::initializer_list<long> coeffs)
    {
        for (long v : coeffs)
            c_.emplace_back(v);
        trim();
    }

    static PolyQ constant(const BigRational& a) { return PolyQ(std::vector<BigRational>{a}); }

    /// a * X^k
    static PolyQ monomial(const BigRational& a, std::size_t k)
    {
        std::vector<BigRational> c(k + 1);
        c[k] = a;
        return PolyQ(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRational>& coefficients() const { return c_; }
    BigRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }
    BigRational leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

    BigRational eval(const BigRational& x) const
    {
        BigRational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    PolyQ derivative() const
    {
        std::vector<BigRational> d;
        for (std::size_t k = 1; k < c_.size(); ++k)
            d.push_back(c_[k] * BigRational(static_cast<long>(k)));
        return PolyQ(std::move(d));
    }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b)
    {
        std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = a.coeff(k) + b.coeff(k);
        return PolyQ(std::move(r));
    }
    friend PolyQ operator-(const PolyQ& a) { return a * PolyQ::constant(-1); }
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return PolyQ(std::move(r));
    }
    friend bool operator==(const PolyQ&, const PolyQ&) = default;

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const BigRational& a = c_[static_cast<std::size_t>(k)];
            if (a.is_zero())
                continue;
            BigRational mag = a.sign() < 0 ? -a : a;
            s += s.empty() ? (a.sign() < 0 ? "-" : "") : (a.sign() < 0 ? " - " : " + ");
            bool unit = mag == BigRational(1);
            if (!unit || k == 0)
                s += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
            if (k > 0)
                s += std::string(unit ? "" : "*") + "X" + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return s;
    }

private:
    std::vector<BigRational> c_;
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
};

/// X^n - u*(X + 1).
inline PolyQ nart_vila_trinomial(const BigRational& u, std::size_t n = 24)
{
    std::vector<BigRational> c(n + 1);
    c[0] = -u;
    c[1] = -u;
    c[n] = 1;
    return PolyQ(std::move(c));
}

/// h with f(X) = h(X^2); throws if f has an odd-degree term.
inline PolyQ even_part(const PolyQ& f)
{
    const auto& c = f.coefficients();
    std::vector<BigRational> h;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k % 2 == 0)
            h.push_back(c[k]);
        else if (!c[k].is_zero())
            throw std::invalid_argument("even_part: odd-degree term present");
    }
    return PolyQ(std::move(h));
}

namespace detail {

using IntPoly = std::vector<BigInt>;  // ascending, trimmed

inline void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}
inline int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline BigInt content(const IntPoly& p)
{
    BigInt g = 0;
    for (const auto& a : p)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b)
{
    const int db = deg(b);
    const BigInt& lb = b.back();
    int e = deg(a) - db + 1;
    while (deg(a) >= db) {
        BigInt la = a.back();
        const int shift = deg(a) - db;
        for (auto& x : a)
            x *= lb;
        for (int k = 0; k <= db; ++k)
            a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
        trim(a);
        --e;
    }
    if (e > 0) {
        BigInt f = big_pow(lb, static_cast<unsigned long>(e));
        for (auto& x : a)
            x *= f;
    }
    return a;
}

// Sylvester-determinant resultant of integer polynomials via the
// subresultant PRS (Collins / Brown-Traub), with content removal up front.
inline BigInt sylvester_resultant(IntPoly a, IntPoly b)
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    if (deg(a) == 0)
        return big_pow(a[0], static_cast<unsigned long>(deg(b)));
    if (deg(b) == 0)
        return big_pow(b[0], static_cast<unsigned long>(deg(a)));

    BigInt ca = content(a), cb = content(b);
    for (auto& x : a)
        x /= ca;
    for (auto& x : b)
        x /= cb;
    BigInt t = big_pow(ca, static_cast<unsigned long>(deg(b))) * big_pow(cb, static_cast<unsigned long>(deg(a)));
    int s = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1)
            s = -s;
    }
    BigInt g = 1, h = 1;
    while (true) {
        const int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1)
            s = -s;
        IntPoly r = pseudo_rem(a, b);
        if (r.empty())
            return 0;
        a = std::move(b);
        BigInt divisor = g * big_pow(h, static_cast<unsigned long>(delta));
        for (auto& x : r)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
        b = std::move(r);
        g = a.back();
        // h <- h^(1-delta) * g^delta, exact
        if (delta == 0) {
            // unchanged
        } else {
            BigInt num = big_pow(g, static_cast<unsigned long>(delta));
            BigInt den = big_pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (deg(b) == 0) {
            const int da = deg(a);
            BigInt num = big_pow(b[0], static_cast<unsigned long>(da));
            BigInt den = big_pow(h, static_cast<unsigned long>(da - 1));
            BigInt hh;
            mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * t * hh;
        }
    }
}

struct Cleared {
    IntPoly poly;
    BigInt scale;  // poly = scale * f
};

inline Cleared clear_denominators(const PolyQ& f)
{
    BigInt l = 1;
    for (const auto& a : f.coefficients()) {
        BigInt d = a.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    IntPoly p;
    for (const auto& a : f.coefficients())
        p.push_back(a.num() * (l / a.den()));
    return {std::move(p), l};
}

}  // namespace detail

/// Res(f, g) with the convention documented at the top of this header.
inline BigRational resultant(const PolyQ& f, const PolyQ& g)
{
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of the zero polynomial");
    auto [F, a] = detail::clear_denominators(f);
    auto [G, b] = detail::clear_denominators(g);
    const auto m = static_cast<unsigned long>(f.degree());
    const auto n = static_cast<unsigned long>(g.degree());
    BigInt r = detail::sylvester_resultant(std::move(F), std::move(G));
    if ((m * n) % 2 == 1)
        r = -r;
    // Res is homogeneous of degree n in f's coefficients and m in g's.
    return BigRational(r, big_pow(a, n) * big_pow(b, m));
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline BigRational discriminant(const PolyQ& f)
{
    if (f.degree() < 1)
        throw std::invalid_argument("discriminant of a constant polynomial");
    const long n = f.degree();
    BigRational r = resultant(f, f.derivative()) / f.leading();
    return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

/// Closed form disc(X^n - u(X+1)); for n = 24 this is -(23^23 u + 24^24) u^23.
inline BigRational trinomial_disc(const BigRational& u, unsigned n = 24)
{
    if (u.is_zero())
        throw std::domain_error("trinomial_disc: u = 0 gives the inseparable X^n");
    if (n < 2)
        throw std::invalid_argument("trinomial_disc: degree must be at least 2");
    // disc(X^n + aX + b) = (-1)^(n(n-1)/2) (n^n b^(n-1) + (1-n)^(n-1) a^n), a = b = -u
    const long nn = static_cast<long>(n);
    BigRational a = -u;
    BigRational term = BigRational(big_pow(BigInt(nn), n)) * a.pow(nn - 1) +
                       BigRational(big_pow(BigInt(1 - nn), n - 1)) * a.pow(nn);
    return ((nn * (nn - 1) / 2) % 2 == 0) ? term : -term;
}

/// {"degree": n, "coefficients": ["num/den", ...]} with ascending
/// coefficients as decimal strings.
inline nlohmann::json poly_to_json(const PolyQ& f)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& a : f.coefficients())
        coeffs.push_back(a.str());
    if (f.is_zero())
        coeffs.push_back("0");
    return nlohmann::json{{"degree", f.is_zero() ? 0 : f.degree()}, {"coefficients", coeffs}};
}

/// Accepts coefficients as decimal "num/den" strings or factored
/// expressions ("2^67*3^24/(23^23*31)"), and plain JSON integers.
inline PolyQ poly_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
        throw std::invalid_argument("polynomial JSON needs a \"coefficients\" array");
    std::vector<BigRational> c;
    for (const auto& v : j["coefficients"]) {
        if (v.is_string())
            c.push_back(parse_rational_expr(v.get<std::string>()));
        else if (v.is_number_integer())
            c.emplace_back(v.get<long>());
        else
            throw std::invalid_argument("polynomial coefficients must be strings or integers");
    }
    PolyQ f(std::move(c));
    if (j.contains("degree")) {
        long d = j["degree"].get<long>();
        long actual = f.is_zero() ? 0 : f.degree();
        if (d != actual)
            throw std::invalid_argument("declared degree " + std::to_string(d) +
                                        " does not match coefficients (degree " +
                                        std::to_string(actual) + ")");
    }
    return f;
}

}  // namespace cubegal
