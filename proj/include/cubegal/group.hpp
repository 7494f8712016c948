#pragma once
// Permutation groups through a base and strong generating set.
//
// Construction runs randomized Schreier-Sims (sifting product-replacement
// elements) and then a deterministic Schreier-generator pass over every
// level. After that pass the stabilizer chain is complete, so the order
// and membership answers are exact, not probabilistic.

#include "cubegal/perm.hpp"
#include "cubegal/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace cubegal {

/// Product replacement sampler: 10 slots plus an accumulator ("rattle"),
/// 60 burn-in steps. Deterministic given the seed.
class ProductReplacement {
public:
    static constexpr std::size_t kSlots = 10;
    static constexpr std::size_t kBurnIn = 60;

    ProductReplacement(std::span<const Permutation> gens, std::size_t degree, std::uint64_t seed)
        : rng_(seed), accumulator_(degree)
    {
        std::vector<Permutation> nontrivial;
        for (const auto& g : gens)
            if (!g.is_identity())
                nontrivial.push_back(g);
        if (nontrivial.empty())
            return;
        for (std::size_t i = 0; i < kSlots; ++i)
            slots_.push_back(nontrivial[i % nontrivial.size()]);
        for (std::size_t i = 0; i < kBurnIn; ++i)
            next();
    }

    Permutation next()
    {
        if (slots_.empty())
            return accumulator_;
        std::uniform_int_distribution<std::size_t> pick(0, kSlots - 1);
        std::size_t i = pick(rng_);
        std::size_t j = pick(rng_);
        while (j == i)
            j = pick(rng_);
        const Permutation& other = slots_[j];
        switch (rng_() & 3u) {
        case 0: slots_[i] = slots_[i] * other; break;
        case 1: slots_[i] = slots_[i] * other.inverse(); break;
        case 2: slots_[i] = other * slots_[i]; break;
        default: slots_[i] = other.inverse() * slots_[i]; break;
        }
        accumulator_ = accumulator_ * slots_[i];
        return accumulator_;
    }

private:
    std::mt19937_64 rng_;
    std::vector<Permutation> slots_;
    Permutation accumulator_;
};

struct BuildOptions {
    std::uint64_t seed = 0x5eedc0beULL;
    /// Consecutive random elements that must sift to the identity before the
    /// randomized phase stops. Only affects speed; the deterministic pass
    /// completes the chain regardless.
    std::size_t quiet_rounds = 40;
    /// Upper bound on the number of strong generators; exceeded => build
    /// reports failure through try_build / extend.
    std::size_t max_strong_generators = 100000;
};

class GroupHandle {
public:
    struct SiftResult {
        Permutation residue;
        std::size_t level;  // first level where sifting stopped; == base length if it got through
    };

    /// Builds the stabilizer chain for <gens>. Throws on degree mismatch or
    /// an empty list.
    static GroupHandle build(std::vector<Permutation> gens, const BuildOptions& opts = {})
    {
        auto g = try_build(std::move(gens), opts);
        if (!g)
            throw std::runtime_error("strong generating set exceeded the configured cap");
        return std::move(*g);
    }

    /// As build(), but returns nullopt if the strong generator cap is hit.
    static std::optional<GroupHandle> try_build(std::vector<Permutation> gens, const BuildOptions& opts = {})
    {
        if (gens.empty())
            throw std::invalid_argument("GroupHandle::build: empty generator list");
        GroupHandle g(gens.front().degree(), opts);
        detail::check_same_degree(gens, g.degree_);
        g.generators_ = std::move(gens);
        for (const auto& s : g.generators_)
            if (!g.insert_if_new(s))
                return std::nullopt;
        if (!g.randomized_phase() || !g.verify_phase())
            return std::nullopt;
        return g;
    }

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& strong_generators() const { return strong_; }

    /// Base points, 1-based.
    std::vector<Point> base() const
    {
        std::vector<Point> b;
        for (const auto& l : levels_)
            b.push_back(l.base + 1);
        return b;
    }

    std::vector<std::size_t> basic_orbit_sizes() const
    {
        std::vector<std::size_t> s;
        for (const auto& l : levels_)
            s.push_back(l.orbit.size());
        return s;
    }

    BigInt order() const
    {
        BigInt n = 1;
        for (const auto& l : levels_)
            n *= static_cast<unsigned long>(l.orbit.size());
        return n;
    }

    bool contains(const Permutation& p) const
    {
        if (p.degree() != degree_)
            throw std::invalid_argument("contains: degree mismatch");
        return sift(p, 0).residue.is_identity();
    }

    SiftResult sift(Permutation h, std::size_t from_level = 0) const
    {
        for (std::size_t i = from_level; i < levels_.size(); ++i) {
            const Level& l = levels_[i];
            Point beta = h[l.base];
            std::int32_t idx = l.index[beta];
            if (idx < 0)
                return {std::move(h), i};
            h = l.inv_reps[static_cast<std::size_t>(idx)] * h;
        }
        return {std::move(h), levels_.size()};
    }

    /// Adds a generator and completes the chain again. Returns false if the
    /// strong generator cap was hit (the handle is then unusable).
    bool extend(const Permutation& g)
    {
        if (g.degree() != degree_)
            throw std::invalid_argument("extend: degree mismatch");
        generators_.push_back(g);
        if (!insert_if_new(g))
            return false;
        return verify_phase();
    }

    /// A product-replacement element determined by `seed`.
    Permutation random_element(std::uint64_t seed) const
    {
        ProductReplacement pr(generators_, degree_, seed);
        return pr.next();
    }

private:
    struct Level {
        Point base;                         // 0-based
        std::vector<std::size_t> gens;      // indices into strong_
        std::vector<std::int32_t> index;    // point -> position in orbit, -1 if absent
        std::vector<Point> orbit;
        std::vector<Permutation> reps;      // reps[k](base) == orbit[k]
        std::vector<Permutation> inv_reps;
    };

    GroupHandle(std::size_t degree, BuildOptions opts) : degree_(degree), opts_(opts) {}

    std::size_t degree_;
    BuildOptions opts_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> strong_;
    std::vector<Level> levels_;

    void add_level(Point base)
    {
        Level l;
        l.base = base;
        l.index.assign(degree_, -1);
        l.index[base] = 0;
        l.orbit.push_back(base);
        l.reps.emplace_back(degree_);
        l.inv_reps.emplace_back(degree_);
        levels_.push_back(std::move(l));
    }

    // Adds strong_[gi] to level li and extends that level's orbit.
    void attach(std::size_t li, std::size_t gi)
    {
        Level& l = levels_[li];
        l.gens.push_back(gi);
        const std::size_t old_size = l.orbit.size();
        // Old points only need the new generator; new points need all.
        for (std::size_t k = 0; k < l.orbit.size(); ++k) {
            auto apply = [&](std::size_t sgi) {
                const Permutation& s = strong_[sgi];
                Point img = s[l.orbit[k]];
                if (l.index[img] >= 0)
                    return;
                l.index[img] = static_cast<std::int32_t>(l.orbit.size());
                l.orbit.push_back(img);
                Permutation rep = s * l.reps[k];
                l.inv_reps.push_back(rep.inverse());
                l.reps.push_back(std::move(rep));
            };
            if (k < old_size)
                apply(gi);
            else
                for (std::size_t sgi : l.gens)
                    apply(sgi);
        }
    }

    // Inserts a sift residue that stopped at `level`.
    bool insert_residue(Permutation h, std::size_t level)
    {
        if (strong_.size() >= opts_.max_strong_generators)
            return false;
        if (level == levels_.size()) {
            Point moved = 0;
            while (h[moved] == moved)
                ++moved;
            add_level(moved);
        }
        strong_.push_back(std::move(h));
        const std::size_t gi = strong_.size() - 1;
        for (std::size_t i = 0; i <= level; ++i)
            attach(i, gi);
        return true;
    }

    bool insert_if_new(const Permutation& g)
    {
        auto [h, level] = sift(g, 0);
        if (h.is_identity())
            return true;
        return insert_residue(std::move(h), level);
    }

    bool randomized_phase()
    {
        if (levels_.empty())
            return true;
        ProductReplacement pr(generators_, degree_, opts_.seed);
        std::size_t quiet = 0;
        while (quiet < opts_.quiet_rounds) {
            auto [h, level] = sift(pr.next(), 0);
            if (h.is_identity()) {
                ++quiet;
                continue;
            }
            quiet = 0;
            if (!insert_residue(std::move(h), level))
                return false;
        }
        return true;
    }

    // Every Schreier generator of every level must sift through the levels
    // below it. When one does not, its residue is added and checking
    // resumes at the level it was added to.
    bool verify_phase()
    {
        std::size_t i = levels_.size();
        while (i > 0) {
            const std::size_t li = i - 1;
            bool clean = true;
            for (std::size_t k = 0; k < levels_[li].orbit.size() && clean; ++k) {
                for (std::size_t gj = 0; gj < levels_[li].gens.size(); ++gj) {
                    const Level& l = levels_[li];
                    const Permutation& s = strong_[l.gens[gj]];
                    Point img = s[l.orbit[k]];
                    const Permutation& back = l.inv_reps[static_cast<std::size_t>(l.index[img])];
                    Permutation schreier = back * (s * l.reps[k]);
                    if (schreier.is_identity())
                        continue;
                    auto [h, level] = sift(std::move(schreier), li + 1);
                    if (h.is_identity())
                        continue;
                    if (!insert_residue(std::move(h), level))
                        return false;
                    i = std::min(level, levels_.size() - 1) + 1;
                    clean = false;
                    break;
                }
            }
            if (clean)
                --i;
        }
        return true;
    }
};

/// |G / [G, G]|, computed as |G| / |normal closure of the generator
/// commutators|. nullopt when the strong generator cap is exceeded.
inline std::optional<BigInt> abelianization_order(const GroupHandle& g, std::size_t cap = 5000)
{
    const auto& gens = g.generators();
    std::vector<Permutation> comms;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            Permutation c = gens[a].inverse() * gens[b].inverse() * gens[a] * gens[b];
            if (!c.is_identity())
                comms.push_back(c);
        }
    if (comms.empty())
        return g.order();
    BuildOptions opts;
    opts.max_strong_generators = cap;
    auto derived = GroupHandle::try_build(comms, opts);
    if (!derived)
        return std::nullopt;
    // Normal closure: conjugate every generator of the growing subgroup by
    // every generator of G until nothing new appears.
    std::vector<Permutation> queue = comms;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& x : gens) {
            Permutation c = x * queue[head] * x.inverse();
            if (derived->contains(c))
                continue;
            if (!derived->extend(c))
                return std::nullopt;
            queue.push_back(c);
        }
    }
    return BigInt(g.order() / derived->order());
}

}  // namespace cubegal
