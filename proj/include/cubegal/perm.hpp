#pragma once
// Permutations of {1..N}, cycle notation, cycle types, orbits and block
// systems.
//
// Composition convention (used everywhere in this library):
//     compose(p, q)(i) == p(q(i))
// i.e. q is applied first. `p * q` is the same product.

#include "cubegal/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubegal {

/// 1-based point label in all public interfaces.
using Point = std::uint32_t;

class Permutation {
public:
    Permutation() = default;

    /// Identity on `degree` points.
    explicit Permutation(std::size_t degree) : img_(degree)
    {
        std::iota(img_.begin(), img_.end(), Point{0});
    }

    /// From 1-based images: images[i-1] is the image of point i.
    static Permutation from_images(const std::vector<Point>& images)
    {
        std::vector<Point> zero(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i] == 0)
                throw std::invalid_argument("permutation images are 1-based");
            zero[i] = images[i] - 1;
        }
        return from_zero_based(std::move(zero));
    }

    /// From 0-based images; validated.
    static Permutation from_zero_based(std::vector<Point> images)
    {
        std::vector<bool> seen(images.size(), false);
        for (Point v : images) {
            if (v >= images.size() || seen[v])
                throw std::invalid_argument("images do not form a bijection");
            seen[v] = true;
        }
        Permutation p;
        p.img_ = std::move(images);
        return p;
    }

    std::size_t degree() const { return img_.size(); }

    /// Image of the 1-based point i.
    Point image(Point i) const
    {
        if (i == 0 || i > img_.size())
            throw std::out_of_range("point " + std::to_string(i) + " outside 1.." +
                                    std::to_string(img_.size()));
        return img_[i - 1] + 1;
    }

    /// Raw 0-based access, unchecked.
    Point operator[](std::size_t i) const { return img_[i]; }
    const std::vector<Point>& zero_based() const { return img_; }

    /// 1-based images, images()[i-1] = image(i).
    std::vector<Point> images() const
    {
        std::vector<Point> out(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            out[i] = img_[i] + 1;
        return out;
    }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i)
                return false;
        return true;
    }

    Permutation inverse() const
    {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            r.img_[img_[i]] = static_cast<Point>(i);
        return r;
    }

    /// p(q(i)).
    friend Permutation compose(const Permutation& p, const Permutation& q)
    {
        if (p.degree() != q.degree())
            throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                        " vs " + std::to_string(q.degree()) + ")");
        Permutation r;
        r.img_.resize(q.img_.size());
        for (std::size_t i = 0; i < q.img_.size(); ++i)
            r.img_[i] = p.img_[q.img_[i]];
        return r;
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

    Permutation pow(long long e) const
    {
        Permutation base = e < 0 ? inverse() : *this;
        unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
        Permutation r(degree());
        while (k) {
            if (k & 1)
                r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    /// Cycles with 1-based points, each starting at its smallest point,
    /// sorted by that point. Fixed points are included as 1-cycles.
    std::vector<std::vector<Point>> cycles() const
    {
        std::vector<std::vector<Point>> out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i])
                continue;
            std::vector<Point> c;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                c.push_back(static_cast<Point>(j + 1));
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    /// +1 or -1.
    int sign() const
    {
        std::size_t cycles_count = 0;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i])
                continue;
            ++cycles_count;
            for (std::size_t j = i; !seen[j]; j = img_[j])
                seen[j] = true;
        }
        return ((img_.size() - cycles_count) % 2 == 0) ? 1 : -1;
    }

    /// Multiplicative order, lcm of the cycle lengths.
    BigInt order() const
    {
        BigInt l = 1;
        for (const auto& c : cycles()) {
            BigInt len = static_cast<unsigned long>(c.size());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), len.get_mpz_t());
        }
        return l;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Point> img_;
};

inline int sign(const Permutation& p) { return p.sign(); }

/// Multiset of cycle lengths, fixed points included, stored descending.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<unsigned> parts) : parts_(std::move(parts))
    {
        for (unsigned x : parts_)
            if (x == 0)
                throw std::invalid_argument("cycle type parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    std::size_t count(unsigned len) const
    {
        return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), len));
    }

    /// (-1)^(N - number of parts); agrees with the sign of any permutation of this type.
    int parity() const { return ((degree() - parts_.size()) % 2 == 0) ? 1 : -1; }

    /// "[4^11,1^100]" style: length^multiplicity, descending.
    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i])
                ++j;
            if (i)
                s += ",";
            s += std::to_string(parts_[i]);
            if (j - i > 1)
                s += "^" + std::to_string(j - i);
            i = j;
        }
        return s + "]";
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    std::vector<unsigned> parts_;
};

inline CycleType cycle_type(const Permutation& p)
{
    std::vector<unsigned> parts;
    for (const auto& c : p.cycles())
        parts.push_back(static_cast<unsigned>(c.size()));
    return CycleType(std::move(parts));
}

/// Parses cycle notation such as "(40 88 9 96)(28 76 21 84)". Cycles are
/// applied left to right, so "(1 2)(2 3)" sends 1 -> 2 -> 3. Disjoint
/// cycles (the common case) commute anyway.
inline Permutation parse_cycles(std::string_view text, std::size_t degree)
{
    Permutation result(degree);
    std::vector<bool> used(degree + 1, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto error = [&](const std::string& what) {
        return std::invalid_argument("cycle notation: " + what + " at offset " + std::to_string(i));
    };
    while (true) {
        skip_ws();
        if (i == text.size())
            break;
        if (text[i] != '(')
            throw error("expected '('");
        ++i;
        std::vector<Point> cyc;
        while (true) {
            skip_ws();
            if (i == text.size())
                throw error("unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw error(std::string("unexpected character '") + text[i] + "'");
            unsigned long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<unsigned>(text[i] - '0');
                if (v > degree)
                    break;
                ++i;
            }
            if (v == 0 || v > degree)
                throw std::invalid_argument("cycle notation: point " + std::to_string(v) +
                                            " outside 1.." + std::to_string(degree));
            if (used[v])
                throw std::invalid_argument("cycle notation: point " + std::to_string(v) +
                                            " repeated");
            used[v] = true;
            cyc.push_back(static_cast<Point>(v));
        }
        if (cyc.size() < 2)
            continue;
        std::vector<Point> img = result.zero_based();
        for (std::size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
        result = Permutation::from_zero_based(std::move(img));
    }
    return result;
}

/// Cycle notation with fixed points omitted, cycles ordered by their
/// smallest point. The identity prints as "()".
inline std::string print_cycles(const Permutation& p)
{
    std::string s;
    for (const auto& c : p.cycles()) {
        if (c.size() < 2)
            continue;
        s += "(";
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k)
                s += " ";
            s += std::to_string(c[k]);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

using PointSet = std::vector<Point>;
using Partition = std::vector<PointSet>;

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    /// Returns false when already joined.
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

inline Partition classes_of(UnionFind& uf, std::span<const Point> points)
{
    std::map<std::size_t, PointSet> groups;
    for (Point p : points)
        groups[uf.find(p - 1)].push_back(p);
    Partition out;
    for (auto& [root, pts] : groups) {
        std::sort(pts.begin(), pts.end());
        out.push_back(std::move(pts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void check_same_degree(std::span<const Permutation> gens, std::size_t degree)
{
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw std::invalid_argument("generators of different degrees");
}

}  // namespace detail

/// Orbits of the group generated by `gens` on {1..degree}, each sorted,
/// ordered by smallest point.
inline Partition orbits(std::span<const Permutation> gens, std::size_t degree)
{
    detail::check_same_degree(gens, degree);
    detail::UnionFind uf(degree);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < degree; ++i)
            uf.unite(i, g[i]);
    std::vector<Point> all(degree);
    std::iota(all.begin(), all.end(), Point{1});
    return detail::classes_of(uf, all);
}

inline Partition orbits(std::span<const Permutation> gens)
{
    if (gens.empty())
        throw std::invalid_argument("orbits: empty generator list and no degree given");
    return orbits(gens, gens.front().degree());
}

/// The finest block system of <gens> on `orbit` in which the two seed
/// points share a block (Atkinson's closure). Returns nullopt when that
/// block is the whole orbit.
inline std::optional<Partition> block_system(std::span<const Permutation> gens,
                                             std::span<const Point> orbit,
                                             std::pair<Point, Point> seed)
{
    if (gens.empty())
        throw std::invalid_argument("block_system: empty generator list");
    const std::size_t degree = gens.front().degree();
    detail::check_same_degree(gens, degree);
    auto in_orbit = [&](Point p) { return std::find(orbit.begin(), orbit.end(), p) != orbit.end(); };
    if (!in_orbit(seed.first) || !in_orbit(seed.second))
        throw std::invalid_argument("block_system: seed points must lie in the orbit");

    detail::UnionFind uf(degree);
    std::vector<std::pair<std::size_t, std::size_t>> queue;
    if (uf.unite(seed.first - 1, seed.second - 1))
        queue.emplace_back(seed.first - 1, seed.second - 1);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [a, b] = queue[head];
        for (const auto& g : gens) {
            std::size_t x = g[a], y = g[b];
            if (uf.unite(x, y))
                queue.emplace_back(x, y);
        }
    }
    Partition blocks = detail::classes_of(uf, orbit);
    if (blocks.size() == 1)
        return std::nullopt;
    return blocks;
}

}  // namespace cubegal
