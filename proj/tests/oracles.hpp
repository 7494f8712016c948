#pragma once
// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls the code under test except for value types.

#include "cubegal/perm.hpp"
#include "cubegal/poly_q.hpp"
#include "cubegal/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using cubegal::BigInt;
using cubegal::BigRational;
using cubegal::Permutation;
using cubegal::Point;

/// Orbits by breadth-first closure (1-based points, sorted).
inline std::vector<std::vector<Point>> orbits_bfs(const std::vector<Permutation>& gens, std::size_t n)
{
    std::vector<int> seen(n + 1, 0);
    std::vector<std::vector<Point>> out;
    for (Point s = 1; s <= n; ++s) {
        if (seen[s])
            continue;
        std::vector<Point> orb{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const auto& g : gens) {
                Point t = g.image(orb[i]);
                if (!seen[t]) {
                    seen[t] = 1;
                    orb.push_back(t);
                }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(orb);
    }
    return out;
}

/// Determinant of an integer matrix by Bareiss elimination.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = BigInt((m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Sylvester-matrix resultant of two integer polynomials (ascending coefficients).
inline BigInt sylvester_det(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    const std::size_t N = m + n;
    std::vector<std::vector<BigInt>> S(N, std::vector<BigInt>(N, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k)
            S[i][i + k] = a[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k)
            S[n + i][i + k] = b[n - k];
    return bareiss_det(S);
}

/// Resultant over Q in the convention lc(g)^deg f * prod f(beta), computed
/// from the Sylvester determinant of rational polynomials scaled to integers.
inline BigRational resultant_sylvester(const cubegal::PolyQ& f, const cubegal::PolyQ& g)
{
    auto to_int = [](const cubegal::PolyQ& p, BigInt& scale) {
        scale = 1;
        for (const auto& c : p.coefficients())
            scale = lcm(scale, c.den());
        std::vector<BigInt> out;
        for (const auto& c : p.coefficients())
            out.push_back(BigInt(c.num() * (scale / c.den())));
        return out;
    };
    BigInt sf, sg;
    auto a = to_int(f, sf), b = to_int(g, sg);
    const long m = f.degree(), n = g.degree();
    BigRational syl(sylvester_det(a, b));
    // Res is homogeneous of degree n in f and m in g.
    BigRational r = syl / (BigRational(sf).pow(n) * BigRational(sg).pow(m));
    return ((m * n) % 2 == 0) ? r : -r;
}

/// Integer polynomials over F_p as ascending coefficient vectors.
using Fp = std::vector<unsigned>;

inline void trim(Fp& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

/// Exact division test: returns true and the quotient if d divides a.
inline bool divides(const Fp& d, Fp a, unsigned p, Fp& quotient)
{
    trim(a);
    const int dd = static_cast<int>(d.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < dd) {
        quotient.clear();
        return a.empty();
    }
    unsigned inv = 1;
    while ((inv * d.back()) % p != 1)
        ++inv;
    quotient.assign(a.size() - d.size() + 1, 0);
    for (int k = static_cast<int>(a.size()) - 1; k >= dd; --k) {
        unsigned c = (a[static_cast<std::size_t>(k)] * inv) % p;
        quotient[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            auto& t = a[static_cast<std::size_t>(k - dd + j)];
            t = (t + p * p - (c * d[static_cast<std::size_t>(j)]) % p) % p;
        }
    }
    trim(a);
    return a.empty();
}

/// Monic polynomials of exactly degree d over F_p.
inline std::vector<Fp> monic_of_degree(unsigned d, unsigned p)
{
    std::vector<Fp> out;
    Fp c(d + 1, 0);
    c[d] = 1;
    while (true) {
        out.push_back(c);
        std::size_t i = 0;
        while (i < d && ++c[i] == p)
            c[i++] = 0;
        if (i == d)
            break;
    }
    return out;
}

/// Degrees of the irreducible factors of a (with multiplicity) by trial
/// division with every monic polynomial of degree <= deg/2.
inline std::multiset<unsigned> factor_degrees(Fp a, unsigned p)
{
    trim(a);
    std::multiset<unsigned> out;
    unsigned d = 1;
    while (a.size() > 1) {
        if (2 * d > a.size() - 1) {
            out.insert(static_cast<unsigned>(a.size() - 1));
            break;
        }
        bool found = false;
        for (const auto& cand : monic_of_degree(d, p)) {
            Fp q;
            if (divides(cand, a, p, q)) {
                out.insert(d);
                a = q;
                found = true;
                break;
            }
        }
        if (!found)
            ++d;
    }
    return out;
}

/// Cycle types of every element of (C_n wr S_m)^o acting on n*m points,
/// enumerated element by element.
inline std::set<std::vector<unsigned>> wreath_types_brute(unsigned n, unsigned m)
{
    std::set<std::vector<unsigned>> out;
    std::vector<unsigned> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0u);
    do {
        std::vector<unsigned> x(m, 0);
        while (true) {
            if (std::accumulate(x.begin(), x.end(), 0u) % n == 0) {
                // point (i, a) -> (sigma(i), a + x_{sigma(i)})
                std::vector<unsigned> img(n * m);
                for (unsigned i = 0; i < m; ++i)
                    for (unsigned a = 0; a < n; ++a)
                        img[i * n + a] = sigma[i] * n + (a + x[sigma[i]]) % n;
                std::vector<bool> seen(n * m, false);
                std::vector<unsigned> parts;
                for (unsigned s = 0; s < n * m; ++s) {
                    if (seen[s])
                        continue;
                    unsigned len = 0;
                    for (unsigned t = s; !seen[t]; t = img[t]) {
                        seen[t] = true;
                        ++len;
                    }
                    parts.push_back(len);
                }
                std::sort(parts.rbegin(), parts.rend());
                out.insert(parts);
            }
            std::size_t i = 0;
            while (i < m && ++x[i] == n)
                x[i++] = 0;
            if (i == m)
                break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

inline Permutation random_perm(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{1});
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(img);
}

inline BigRational random_rational(std::mt19937_64& rng, long range = 1000000)
{
    std::uniform_int_distribution<long> num(-range, range), den(1, range);
    long a = 0;
    while (a == 0)
        a = num(rng);
    return BigRational(BigInt(a), BigInt(den(rng)));
}

}  // namespace oracle
