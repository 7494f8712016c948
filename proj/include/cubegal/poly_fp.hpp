#pragma once
// Polynomials over F_p for word-sized primes: reduction of rational
// polynomials, gcd, powering modulo a polynomial, and distinct-degree
// factorization, whose factor degrees are the Frobenius cycle type.

#include "cubegal/perm.hpp"
#include "cubegal/poly_q.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cubegal {

using u64 = std::uint64_t;

namespace modp {

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) { u64 s = a + b; return (s >= p || s < a) ? s - p : s; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
inline u64 pow(u64 a, u64 e, u64 p)
{
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 inv(u64 a, u64 p)
{
    if (a % p == 0)
        throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2, p);
}

}  // namespace modp

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = modp::pow(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = modp::mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Polynomial over F_p, ascending residues, trimmed.
class PolyFp {
public:
    PolyFp(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs))
    {
        if (p < 2)
            throw std::invalid_argument("PolyFp: modulus must be a prime");
        for (auto& x : c_)
            x %= p_;
        trim();
    }
    explicit PolyFp(u64 p) : PolyFp(p, {}) {}

    static PolyFp x(u64 p) { return PolyFp(p, {0, 1}); }

    u64 modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<u64>& coefficients() const { return c_; }
    u64 leading() const { return c_.empty() ? 0 : c_.back(); }

    PolyFp monic() const
    {
        if (is_zero())
            return *this;
        u64 li = modp::inv(leading(), p_);
        std::vector<u64> r(c_);
        for (auto& v : r)
            v = modp::mul(v, li, p_);
        return PolyFp(p_, std::move(r));
    }

    PolyFp derivative() const
    {
        std::vector<u64> d;
        for (std::size_t k = 1; k < c_.size(); ++k)
            d.push_back(modp::mul(c_[k], k % p_, p_));
        return PolyFp(p_, std::move(d));
    }

    friend PolyFp operator+(const PolyFp& a, const PolyFp& b)
    {
        check(a, b);
        std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = modp::add(k < a.c_.size() ? a.c_[k] : 0, k < b.c_.size() ? b.c_[k] : 0, a.p_);
        return PolyFp(a.p_, std::move(r));
    }
    friend PolyFp operator-(const PolyFp& a, const PolyFp& b)
    {
        check(a, b);
        std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = modp::sub(k < a.c_.size() ? a.c_[k] : 0, k < b.c_.size() ? b.c_[k] : 0, a.p_);
        return PolyFp(a.p_, std::move(r));
    }
    friend PolyFp operator*(const PolyFp& a, const PolyFp& b)
    {
        check(a, b);
        if (a.is_zero() || b.is_zero())
            return PolyFp(a.p_);
        std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = modp::add(r[i + j], modp::mul(a.c_[i], b.c_[j], a.p_), a.p_);
        }
        return PolyFp(a.p_, std::move(r));
    }

    struct DivMod;
    friend DivMod divmod(const PolyFp& a, const PolyFp& b);

    friend bool operator==(const PolyFp&, const PolyFp&) = default;

private:
    u64 p_;
    std::vector<u64> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
    static void check(const PolyFp& a, const PolyFp& b)
    {
        if (a.p_ != b.p_)
            throw std::invalid_argument("PolyFp: modulus mismatch");
    }
};

struct PolyFp::DivMod {
    PolyFp quotient;
    PolyFp remainder;
};

inline PolyFp::DivMod divmod(const PolyFp& a, const PolyFp& b)
{
    PolyFp::check(a, b);
    if (b.is_zero())
        throw std::domain_error("PolyFp: division by zero polynomial");
    const u64 p = a.p_;
    std::vector<u64> r = a.c_;
    const int db = b.degree();
    if (a.degree() < db)
        return {PolyFp(p), a};
    std::vector<u64> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const u64 li = modp::inv(b.leading(), p);
    for (int k = a.degree(); k >= db; --k) {
        u64 coef = modp::mul(r[static_cast<std::size_t>(k)], li, p);
        q[static_cast<std::size_t>(k - db)] = coef;
        if (coef == 0)
            continue;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k - db + j);
            r[idx] = modp::sub(r[idx], modp::mul(coef, b.c_[static_cast<std::size_t>(j)], p), p);
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {PolyFp(p, std::move(q)), PolyFp(p, std::move(r))};
}

inline PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).remainder; }
inline PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).quotient; }

/// Monic gcd (zero if both are zero).
inline PolyFp gcd(PolyFp a, PolyFp b)
{
    while (!b.is_zero()) {
        PolyFp r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^e mod modpoly by square-and-multiply.
inline PolyFp powmod(const PolyFp& base, const BigInt& e, const PolyFp& modpoly)
{
    if (modpoly.degree() < 1)
        throw std::invalid_argument("powmod: modulus polynomial must have degree >= 1");
    if (e < 0)
        throw std::invalid_argument("powmod: negative exponent");
    PolyFp result(base.modulus(), {1});
    result = result % modpoly;
    PolyFp b = base % modpoly;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modpoly;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * b) % modpoly;
    }
    return result;
}

inline PolyFp powmod(const PolyFp& base, u64 e, const PolyFp& modpoly)
{
    return powmod(base, BigInt(static_cast<unsigned long>(e)), modpoly);
}

/// Coefficientwise reduction; nullopt ("bad prime") when p divides a
/// denominator or the leading numerator. Throws if p is not prime.
inline std::optional<PolyFp> reduce_mod_p(const PolyQ& f, u64 p)
{
    if (!is_prime_u64(p))
        throw std::invalid_argument("reduce_mod_p: " + std::to_string(p) + " is not prime");
    if (f.is_zero())
        return PolyFp(p);
    BigInt P = static_cast<unsigned long>(p);
    std::vector<u64> c;
    for (const auto& a : f.coefficients()) {
        BigInt dr = a.den() % P;
        if (dr == 0)
            return std::nullopt;
        BigInt nr = a.num() % P;
        if (nr < 0)
            nr += P;
        c.push_back(modp::mul(nr.get_ui(), modp::inv(dr.get_ui(), p), p));
    }
    if (c.back() == 0)
        return std::nullopt;
    return PolyFp(p, std::move(c));
}

/// Degrees of the irreducible factors (with multiplicity), or nullopt when
/// f is not squarefree mod p.
inline std::optional<CycleType> ddf_cycle_type(const PolyFp& f_in)
{
    if (f_in.is_zero())
        throw std::invalid_argument("ddf_cycle_type: zero polynomial");
    const u64 p = f_in.modulus();
    PolyFp f = f_in.monic();
    if (f.degree() == 0)
        return CycleType{};
    if (gcd(f, f.derivative()).degree() != 0)
        return std::nullopt;
    std::vector<unsigned> parts;
    PolyFp rest = f;
    const PolyFp X = PolyFp::x(p);
    PolyFp h = X % rest;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, p, rest);  // X^(p^d) mod rest
        PolyFp g = gcd(h - X, rest);
        if (g.degree() > 0) {
            for (int k = 0; k < g.degree() / d; ++k)
                parts.push_back(static_cast<unsigned>(d));
            rest = rest / g;
            if (rest.degree() >= 1)
                h = h % rest;
        }
    }
    if (rest.degree() > 0)
        parts.push_back(static_cast<unsigned>(rest.degree()));
    return CycleType(std::move(parts));
}

/// Consecutive primes from 2 upward.
class PrimeStream {
public:
    u64 next()
    {
        if (current_ < 2) {
            current_ = 2;
            return 2;
        }
        u64 n = current_ + (current_ == 2 ? 1 : 2);
        while (!is_prime_u64(n))
            n += 2;
        current_ = n;
        return n;
    }

private:
    u64 current_ = 0;
};

/// Legendre symbol (a/p) for an odd prime p and a rational a with
/// p-adic valuation zero: +1, -1, or 0 when p divides a.
inline int legendre(const BigRational& a, u64 p)
{
    BigInt P = static_cast<unsigned long>(p);
    BigInt n = a.num() % P, d = a.den() % P;
    if (n < 0)
        n += P;
    if (n == 0 || d == 0)
        return 0;
    u64 v = modp::mul(n.get_ui(), d.get_ui(), p);  // a*d^2 has the same symbol as n*d
    u64 e = modp::pow(v, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

}  // namespace cubegal
