#pragma once
// Restricted wreath products (C_n wr S_m)^o, fiber products over sign
// characters, and the order formulas that tie the abstract descriptions of
// the cube groups to the sticker groups.

#include "cubegal/perm.hpp"
#include "cubegal/rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cubegal {

/// (x, sigma) in C_n wr S_m, with sigma acting on the twist vector by
/// (sigma.x)_i = x_{sigma^-1(i)} and product (x, s)(x', s') = (x + s.x', s s').
struct WreathElement {
    unsigned n = 2;
    std::vector<unsigned> twist;  // x, entries in [0, n)
    Permutation sigma;

    static WreathElement identity(unsigned n, std::size_t m)
    {
        return {n, std::vector<unsigned>(m, 0), Permutation(m)};
    }

    std::size_t blocks() const { return sigma.degree(); }

    unsigned twist_sum() const
    {
        return std::accumulate(twist.begin(), twist.end(), 0u) % n;
    }

    /// Member of (C_n wr S_m)^o, the kernel of (x, sigma) -> sum x_i.
    bool in_restricted() const { return twist_sum() == 0; }

    friend WreathElement operator*(const WreathElement& a, const WreathElement& b)
    {
        if (a.n != b.n || a.blocks() != b.blocks())
            throw std::invalid_argument("wreath elements from different groups");
        const std::size_t m = a.blocks();
        WreathElement r{a.n, std::vector<unsigned>(m), a.sigma * b.sigma};
        const Permutation ai = a.sigma.inverse();
        for (std::size_t i = 0; i < m; ++i) {
            unsigned moved = b.twist[ai[i]];
            r.twist[i] = (a.twist[i] + moved) % a.n;
        }
        return r;
    }

    WreathElement inverse() const
    {
        // (x, s)^-1 = (-(s^-1 . x), s^-1)
        const std::size_t m = blocks();
        Permutation si = sigma.inverse();
        WreathElement r{n, std::vector<unsigned>(m), si};
        for (std::size_t i = 0; i < m; ++i)
            r.twist[i] = (n - twist[sigma[i]]) % n;
        return r;
    }

    /// Imprimitive action on n*m points: point i*n + a + 1 (block i, level a)
    /// goes to block sigma(i), level a + x_{sigma(i)}.
    Permutation to_permutation() const
    {
        const std::size_t m = blocks();
        std::vector<Point> img(n * m);
        for (std::size_t i = 0; i < m; ++i) {
            const Point j = sigma[i];
            for (unsigned a = 0; a < n; ++a)
                img[i * n + a] = static_cast<Point>(j * n + (a + twist[j]) % n);
        }
        return Permutation::from_zero_based(std::move(img));
    }

    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Every element of (C_n wr S_m)^o; meant for small cases only.
inline std::vector<WreathElement> enumerate_restricted_wreath(unsigned n, std::size_t m)
{
    if (n < 2 || m < 1)
        throw std::invalid_argument("enumerate_restricted_wreath: need n >= 2, m >= 1");
    std::vector<WreathElement> out;
    std::vector<Point> perm(m);
    std::iota(perm.begin(), perm.end(), Point{0});
    do {
        Permutation sigma = Permutation::from_zero_based(perm);
        std::vector<unsigned> x(m, 0);
        while (true) {
            WreathElement e{n, x, sigma};
            if (e.in_restricted())
                out.push_back(e);
            std::size_t i = 0;
            while (i < m && ++x[i] == n)
                x[i++] = 0;
            if (i == m)
                break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline BigInt factorial(unsigned long k)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

/// |(C_n wr S_m)^o| = n^(m-1) * m!
inline BigInt restricted_wreath_order(unsigned n, unsigned m)
{
    if (n < 2 || m < 2)
        throw std::invalid_argument("restricted_wreath_order: need n, m >= 2");
    return big_pow(BigInt(n), m - 1) * factorial(m);
}

/// A sign character on a finite group, recorded by the group's order and
/// whether the character hits -1 (checked on generators).
struct SignFactor {
    BigInt order;
    bool surjective = false;
};

/// Checks surjectivity of a character on generators: some generator maps to -1.
template <class Gens, class Character>
bool character_surjective(const Gens& gens, Character chi)
{
    return std::any_of(std::begin(gens), std::end(gens), [&](const auto& g) { return chi(g) == -1; });
}

/// |{(a, b) in A x B : chi(a) = psi(b)}| = |A||B|/2 for surjective characters.
inline BigInt fiber_order(const SignFactor& left, const SignFactor& right)
{
    if (!left.surjective || !right.surjective)
        throw std::domain_error("fiber_order: both sign characters must be surjective");
    BigInt prod = left.order * right.order;
    if (prod % 2 != 0)
        throw std::domain_error("fiber_order: odd product order");
    return BigInt(prod / 2);
}

inline BigInt fiber_order(const BigInt& a, const BigInt& b)
{
    return fiber_order(SignFactor{a, true}, SignFactor{b, true});
}

/// (C_3 wr S_8)^o x_sign (C_2 wr S_12)^o.
inline BigInt r3_predicted_order()
{
    return fiber_order(restricted_wreath_order(3, 8), restricted_wreath_order(2, 12));
}

/// (C_3 wr S_8)^o x_sign S_24, times a free S_24.
inline BigInt r4_predicted_order()
{
    return fiber_order(restricted_wreath_order(3, 8), factorial(24)) * factorial(24);
}

/// (R_3 x_sign S_24) x_sign (S_24 x S_24) = |R_3| (24!)^3 / 4.
inline BigInt r5_predicted_order()
{
    BigInt inner = fiber_order(r3_predicted_order(), factorial(24));
    BigInt outer_right = factorial(24) * factorial(24);
    return fiber_order(inner, outer_right);
}

/// Element of (C_3 wr S_8)^o x (C_2 wr S_12)^o: corners then edges.
struct CubeElement {
    WreathElement corners;
    WreathElement edges;

    friend CubeElement operator*(const CubeElement& a, const CubeElement& b)
    {
        return {a.corners * b.corners, a.edges * b.edges};
    }
    friend bool operator==(const CubeElement&, const CubeElement&) = default;

    /// Lies in the fiber product: both restricted, and the two sign
    /// characters agree.
    bool in_fiber_product() const
    {
        return corners.in_restricted() && edges.in_restricted() &&
               corners.sigma.sign() == edges.sigma.sign();
    }
};

/// All twelve edges flipped in place, corners untouched.
inline CubeElement superflip()
{
    CubeElement e{WreathElement::identity(3, 8), WreathElement::identity(2, 12)};
    std::fill(e.edges.twist.begin(), e.edges.twist.end(), 1u);
    return e;
}

}  // namespace cubegal
