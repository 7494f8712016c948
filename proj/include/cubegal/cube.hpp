#pragma once
// Sticker-level models of the 3x3x3, 4x4x4 and 5x5x5 cubes.
//
// Sticker classes are the orbits of the generators; the nets are only used
// to name those orbits, to seed one block pair per class (two stickers of a
// physical piece, read across the F/U seam) and to pick orientation
// reference stickers. Pieces are blocks of imprimitivity inside a class.
//
// Orientation frames. Each block carries an ordered list of its stickers
// (its frame); frame[0] is the reference sticker. For corners and edges the
// reference is the sticker on the U or D face (edges without one use F or
// B). Corner frames list the stickers in a cyclic order transported from
// one seed corner by the generators, so all corners share one chirality.
// Wing frames are transported likewise; a wing's orientation is determined
// by its slot, so transports must agree exactly.
//
// A sticker permutation p maps the piece in block B to block s = pi(B) with
// orientation o[s] when p(frame[B][j]) == frame[s][(j + o[s]) mod |B|].

#include "cubegal/cube_data.hpp"
#include "cubegal/group.hpp"
#include "cubegal/perm.hpp"
#include "cubegal/wreath.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubegal {

enum class PieceKind { corner, edge, wing, plus_center, x_center };

inline std::string_view kind_name(PieceKind k)
{
    switch (k) {
    case PieceKind::corner: return "corner";
    case PieceKind::edge: return "edge";
    case PieceKind::wing: return "wing";
    case PieceKind::plus_center: return "plus-center";
    case PieceKind::x_center: return "x-center";
    }
    return "?";
}

struct NetFace {
    char name;
    std::vector<std::vector<Point>> rows;  // 0 = no sticker
};

struct StickerClass {
    PieceKind kind;
    PointSet stickers;
    Partition blocks;                         // ordered by smallest sticker
    std::vector<std::vector<Point>> frames;   // per block, frame[0] = reference
};

struct NamedGenerator {
    std::string name;
    std::string cycles;  // as tabulated
    Permutation perm;
};

class StickerModel {
public:
    unsigned cube_size() const { return n_; }
    std::size_t degree() const { return degree_; }
    const std::vector<NamedGenerator>& named_generators() const { return gens_; }
    std::vector<Permutation> generators() const
    {
        std::vector<Permutation> g;
        for (const auto& ng : gens_)
            g.push_back(ng.perm);
        return g;
    }
    const Permutation& generator(std::string_view name) const
    {
        for (const auto& g : gens_)
            if (g.name == name)
                return g.perm;
        throw std::out_of_range("no generator named " + std::string(name));
    }
    const std::vector<StickerClass>& classes() const { return classes_; }
    const StickerClass& sticker_class(PieceKind k) const
    {
        for (const auto& c : classes_)
            if (c.kind == k)
                return c;
        throw std::out_of_range("model has no " + std::string(kind_name(k)) + " class");
    }
    bool has_class(PieceKind k) const
    {
        return std::any_of(classes_.begin(), classes_.end(), [&](const auto& c) { return c.kind == k; });
    }
    const std::vector<NetFace>& net() const { return net_; }

    /// Face letter of a sticker.
    char face_of(Point s) const
    {
        for (const auto& f : net_)
            for (const auto& row : f.rows)
                if (std::find(row.begin(), row.end(), s) != row.end())
                    return f.name;
        throw std::out_of_range("sticker " + std::to_string(s) + " not on the net");
    }

    /// Index (0-based) of the block containing sticker s within class k.
    std::size_t block_of(PieceKind k, Point s) const
    {
        const auto& cls = sticker_class(k);
        for (std::size_t b = 0; b < cls.blocks.size(); ++b)
            if (std::find(cls.blocks[b].begin(), cls.blocks[b].end(), s) != cls.blocks[b].end())
                return b;
        throw std::out_of_range("sticker not in class");
    }

    // Built by the factory functions below.
    StickerModel(unsigned n, std::size_t degree, std::vector<NamedGenerator> gens, std::vector<NetFace> net)
        : n_(n), degree_(degree), gens_(std::move(gens)), net_(std::move(net))
    {
        classify();
    }

private:
    unsigned n_;
    std::size_t degree_;
    std::vector<NamedGenerator> gens_;
    std::vector<NetFace> net_;
    std::vector<StickerClass> classes_;

    PieceKind position_kind(Point s) const
    {
        for (const auto& f : net_) {
            const int k = static_cast<int>(f.rows.size());
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    if (f.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != s)
                        continue;
                    const bool r_edge = r == 0 || r == k - 1, c_edge = c == 0 || c == k - 1;
                    if (r_edge && c_edge)
                        return PieceKind::corner;
                    const bool r_mid = 2 * r == k - 1, c_mid = 2 * c == k - 1;
                    if ((r_edge && c_mid) || (c_edge && r_mid))
                        return PieceKind::edge;
                    if (r_edge || c_edge)
                        return PieceKind::wing;
                    if (r_mid || c_mid)
                        return PieceKind::plus_center;
                    return PieceKind::x_center;
                }
        }
        throw std::out_of_range("sticker " + std::to_string(s) + " not on the net");
    }

    const NetFace& face(char name) const
    {
        for (const auto& f : net_)
            if (f.name == name)
                return f;
        throw std::out_of_range("net has no face " + std::string(1, name));
    }

    std::optional<std::pair<Point, Point>> seam_seed(const PointSet& stickers) const
    {
        // F's top row meets U's bottom row along one cube edge.
        const auto& F = face('F');
        const auto& U = face('U');
        for (std::size_t c = 0; c < F.rows.front().size(); ++c) {
            Point a = F.rows.front()[c];
            if (a != 0 && std::binary_search(stickers.begin(), stickers.end(), a))
                return std::pair{a, U.rows.back()[c]};
        }
        return std::nullopt;
    }

    // Blocks for a class spread over several orbits (the two mirror-image
    // wing orbits): images of the seed pair under the group.
    Partition transported_blocks(const std::vector<Permutation>& gens, const PointSet& stickers,
                                 std::pair<Point, Point> seed) const
    {
        std::map<Point, std::size_t> owner;
        Partition blocks{{seed.first, seed.second}};
        owner[seed.first] = owner[seed.second] = 0;
        for (std::size_t head = 0; head < blocks.size(); ++head) {
            for (const auto& g : gens) {
                PointSet img;
                for (Point s : blocks[head])
                    img.push_back(g.image(s));
                std::sort(img.begin(), img.end());
                auto it = owner.find(img[0]);
                if (it != owner.end()) {
                    if (blocks[it->second] != img)
                        throw std::logic_error("sticker pairs are not preserved at sticker " + std::to_string(img[0]));
                    continue;
                }
                for (Point s : img)
                    if (!owner.emplace(s, blocks.size()).second)
                        throw std::logic_error("sticker pairs overlap at sticker " + std::to_string(s));
                blocks.push_back(img);
            }
        }
        if (owner.size() != stickers.size())
            throw std::logic_error("sticker pairs do not cover the class");
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    }

    void classify()
    {
        const auto gens = generators();
        std::map<PieceKind, std::vector<PointSet>> by_kind;
        for (auto& orbit : orbits(gens, degree_)) {
            if (orbit.size() == 1 && gens_.size() > 0) {
                // every labelled sticker moves on a real cube
                throw std::logic_error("sticker " + std::to_string(orbit[0]) + " is fixed by all generators");
            }
            const PieceKind kind = position_kind(orbit.front());
            for (Point s : orbit)
                if (position_kind(s) != kind)
                    throw std::logic_error("orbit mixes piece kinds at sticker " + std::to_string(s));
            by_kind[kind].push_back(std::move(orbit));
        }
        for (auto& [kind, orbs] : by_kind) {
            StickerClass cls;
            cls.kind = kind;
            for (const auto& o : orbs)
                cls.stickers.insert(cls.stickers.end(), o.begin(), o.end());
            std::sort(cls.stickers.begin(), cls.stickers.end());
            const auto seed = seam_seed(cls.stickers);
            if (orbs.size() > 1) {
                if (kind != PieceKind::wing || !seed)
                    throw std::logic_error(std::string("several orbits of ") + std::string(kind_name(kind)));
                cls.blocks = transported_blocks(gens, cls.stickers, *seed);
            } else if (seed) {
                auto blocks = block_system(gens, cls.stickers, *seed);
                if (!blocks)
                    throw std::logic_error("no block system for " + std::string(kind_name(kind)));
                cls.blocks = std::move(*blocks);
            } else {
                for (Point s : cls.stickers)
                    cls.blocks.push_back({s});
            }
            classes_.push_back(std::move(cls));
        }
        for (auto& cls : classes_)
            build_frames(cls);
    }

    Point reference_sticker(const PointSet& block, PieceKind kind) const
    {
        for (const char* faces : {"UD", "FB"}) {
            for (Point s : block) {
                char f = face_of(s);
                if (f == faces[0] || f == faces[1])
                    return s;
            }
            if (kind == PieceKind::corner)
                break;
        }
        throw std::logic_error("block without a reference sticker");
    }

    void build_frames(StickerClass& cls)
    {
        const std::size_t nb = cls.blocks.size();
        cls.frames.assign(nb, {});
        if (cls.kind == PieceKind::edge) {
            for (std::size_t b = 0; b < nb; ++b) {
                Point r = reference_sticker(cls.blocks[b], cls.kind);
                Point o = cls.blocks[b][0] == r ? cls.blocks[b][1] : cls.blocks[b][0];
                cls.frames[b] = {r, o};
            }
            return;
        }
        if (cls.blocks.front().size() == 1) {
            for (std::size_t b = 0; b < nb; ++b)
                cls.frames[b] = cls.blocks[b];
            return;
        }
        // Corners and wings: transport the first block's frame.
        auto block_index = [&](Point s) {
            for (std::size_t b = 0; b < nb; ++b)
                if (std::binary_search(cls.blocks[b].begin(), cls.blocks[b].end(), s))
                    return b;
            throw std::logic_error("sticker outside class");
        };
        std::vector<Point> seed = cls.blocks[0];
        if (cls.kind == PieceKind::corner) {
            Point r = reference_sticker(seed, cls.kind);
            std::rotate(seed.begin(), std::find(seed.begin(), seed.end(), r), seed.end());
            std::sort(seed.begin() + 1, seed.end());
        }
        cls.frames[0] = seed;
        std::vector<std::size_t> queue{0};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t b = queue[head];
            for (const auto& g : gens_) {
                std::vector<Point> img;
                for (Point s : cls.frames[b])
                    img.push_back(g.perm.image(s));
                const std::size_t target = block_index(img[0]);
                auto& existing = cls.frames[target];
                if (existing.empty()) {
                    existing = img;
                    queue.push_back(target);
                    continue;
                }
                bool consistent = false;
                if (cls.kind == PieceKind::corner) {
                    for (std::size_t rot = 0; rot < img.size() && !consistent; ++rot) {
                        std::vector<Point> r = img;
                        std::rotate(r.begin(), r.begin() + static_cast<long>(rot), r.end());
                        consistent = r == existing;
                    }
                } else {
                    consistent = img == existing;
                }
                if (!consistent)
                    throw std::logic_error(std::string(kind_name(cls.kind)) +
                                           " orientation is not preserved by generator " + g.name);
            }
        }
        if (cls.kind == PieceKind::corner) {
            for (std::size_t b = 0; b < nb; ++b) {
                auto& fr = cls.frames[b];
                Point r = reference_sticker(cls.blocks[b], cls.kind);
                std::rotate(fr.begin(), std::find(fr.begin(), fr.end(), r), fr.end());
            }
        }
        for (std::size_t b = 0; b < nb; ++b)
            if (cls.frames[b].empty())
                throw std::logic_error("class is not transitive on its blocks");
    }
};

namespace detail {

inline std::vector<NamedGenerator> parse_table(std::span<const data::NamedCycles> table, std::size_t degree)
{
    std::vector<NamedGenerator> out;
    for (const auto& g : table)
        out.push_back({std::string(g.name), std::string(g.cycles), parse_cycles(g.cycles, degree)});
    return out;
}

/// Deletes every point above `max_label` from tabulated cycles. Each cycle
/// must lie entirely on one side of the cut.
inline std::string restrict_cycles(std::string_view text, Point max_label)
{
    std::string out;
    std::size_t i = 0;
    while ((i = text.find('(', i)) != std::string_view::npos) {
        std::size_t j = text.find(')', i);
        if (j == std::string_view::npos)
            throw std::invalid_argument("unterminated cycle");
        std::string_view body = text.substr(i + 1, j - i - 1);
        std::vector<unsigned long> pts;
        std::size_t k = 0;
        while (k < body.size()) {
            while (k < body.size() && body[k] == ' ')
                ++k;
            std::size_t e = k;
            while (e < body.size() && body[e] != ' ')
                ++e;
            if (e > k)
                pts.push_back(std::stoul(std::string(body.substr(k, e - k))));
            k = e;
        }
        const auto above = std::count_if(pts.begin(), pts.end(), [&](auto p) { return p > max_label; });
        if (above != 0 && above != static_cast<long>(pts.size()))
            throw std::logic_error("cycle straddles the restriction cut");
        if (above == 0)
            out += std::string(text.substr(i, j - i + 1));
        i = j + 1;
    }
    return out;
}

}  // namespace detail

/// The Professor's cube: 12 tabulated generators on 144 stickers.
inline StickerModel r5_model()
{
    std::vector<NetFace> net;
    for (const auto& f : data::kProfessorNet) {
        NetFace nf{f.name, {}};
        for (const auto& row : f.rows)
            nf.rows.emplace_back(row.begin(), row.end());
        net.push_back(std::move(nf));
    }
    return StickerModel(5, 144, detail::parse_table(data::kProfessorGenerators, 144), std::move(net));
}

/// The Revenge cube: the Professor's generators with labels above 96 deleted.
inline StickerModel r4_model()
{
    std::vector<NamedGenerator> gens;
    for (const auto& g : data::kProfessorGenerators) {
        std::string text = detail::restrict_cycles(g.cycles, 96);
        gens.push_back({std::string(g.name), text, parse_cycles(text, 96)});
    }
    std::vector<NetFace> net;
    for (const auto& f : data::kProfessorNet) {
        NetFace nf{f.name, {}};
        for (std::size_t r = 0; r < 5; ++r) {
            if (r == 2)
                continue;
            std::vector<Point> row;
            for (std::size_t c = 0; c < 5; ++c)
                if (c != 2)
                    row.push_back(f.rows[r][c]);
            nf.rows.push_back(std::move(row));
        }
        net.push_back(std::move(nf));
    }
    return StickerModel(4, 96, std::move(gens), std::move(net));
}

/// The Rubik's cube: six quarter turns on 48 stickers.
inline StickerModel r3_model()
{
    std::vector<NetFace> net;
    for (const auto& f : data::kRubikNet) {
        NetFace nf{f.name, {}};
        for (const auto& row : f.rows)
            nf.rows.emplace_back(row.begin(), row.end());
        net.push_back(std::move(nf));
    }
    return StickerModel(3, 48, detail::parse_table(data::kRubikGenerators, 48), std::move(net));
}

inline GroupHandle build_group(const StickerModel& m, const BuildOptions& opts = {})
{
    return GroupHandle::build(m.generators(), opts);
}

/// Position and orientation data of one piece class.
struct ClassState {
    PieceKind kind;
    Permutation perm;                   // on blocks, degree = number of pieces
    std::vector<unsigned> orientation;  // indexed by destination block
};

/// Reads piece positions and orientations off a sticker permutation.
/// Throws if p does not map the class's blocks onto blocks or does not
/// carry frames to rotated frames.
inline ClassState read_class(const StickerModel& m, const Permutation& p, PieceKind kind)
{
    if (p.degree() != m.degree())
        throw std::invalid_argument("permutation degree does not match the model");
    const auto& cls = m.sticker_class(kind);
    const std::size_t nb = cls.blocks.size();
    std::map<Point, std::pair<std::size_t, std::size_t>> where;  // sticker -> (block, frame slot)
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t j = 0; j < cls.frames[b].size(); ++j)
            where[cls.frames[b][j]] = {b, j};
    std::vector<Point> img(nb);
    std::vector<unsigned> orient(nb, 0);
    for (std::size_t b = 0; b < nb; ++b) {
        const auto& fr = cls.frames[b];
        auto it = where.find(p.image(fr[0]));
        if (it == where.end())
            throw std::invalid_argument("permutation does not preserve the " + std::string(kind_name(kind)) + " class");
        const auto [target, k] = it->second;
        const std::size_t size = fr.size();
        for (std::size_t j = 0; j < size; ++j) {
            auto jt = where.find(p.image(fr[j]));
            if (jt == where.end() || jt->second.first != target || jt->second.second != (j + k) % size)
                throw std::invalid_argument("permutation does not map " + std::string(kind_name(kind)) +
                                            " pieces onto pieces");
        }
        img[b] = static_cast<Point>(target);
        orient[target] = static_cast<unsigned>(k);
    }
    return {kind, Permutation::from_zero_based(std::move(img)), std::move(orient)};
}

/// Inverse of read_class over all classes: builds the sticker permutation.
inline Permutation encode_state(const StickerModel& m, const std::vector<ClassState>& state)
{
    std::vector<Point> img(m.degree());
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto& cs : state) {
        const auto& cls = m.sticker_class(cs.kind);
        const std::size_t nb = cls.blocks.size();
        if (cs.perm.degree() != nb || cs.orientation.size() != nb)
            throw std::invalid_argument("inconsistent state for " + std::string(kind_name(cs.kind)) + " pieces");
        for (std::size_t b = 0; b < nb; ++b) {
            const auto& src = cls.frames[b];
            const std::size_t t = cs.perm[b];
            const auto& dst = cls.frames[t];
            const std::size_t size = src.size();
            if (cs.orientation[t] >= size)
                throw std::invalid_argument("orientation out of range for " + std::string(kind_name(cs.kind)));
            for (std::size_t j = 0; j < size; ++j)
                img[src[j] - 1] = dst[(j + cs.orientation[t]) % size] - 1;
        }
    }
    return Permutation::from_zero_based(std::move(img));
}

/// Permutation induced on the pieces of one class.
inline Permutation induced_cubie_perm(const StickerModel& m, const Permutation& p, PieceKind kind)
{
    if (p.degree() != m.degree())
        throw std::invalid_argument("permutation degree does not match the model");
    const auto& cls = m.sticker_class(kind);
    const std::size_t nb = cls.blocks.size();
    std::map<Point, std::size_t> block;
    for (std::size_t b = 0; b < nb; ++b)
        for (Point s : cls.blocks[b])
            block[s] = b;
    std::vector<Point> img(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        std::optional<std::size_t> target;
        for (Point s : cls.blocks[b]) {
            auto it = block.find(p.image(s));
            if (it == block.end() || (target && *target != it->second))
                throw std::invalid_argument("permutation does not map " + std::string(kind_name(kind)) +
                                            " blocks to blocks");
            target = it->second;
        }
        img[b] = static_cast<Point>(*target);
    }
    return Permutation::from_zero_based(std::move(img));
}

/// Sign of the induced piece permutation for every class, in class order
/// (corner, edge, wing, plus-center, x-center; absent classes skipped).
inline std::vector<std::pair<PieceKind, int>> sign_vector(const StickerModel& m, const Permutation& p)
{
    std::vector<std::pair<PieceKind, int>> out;
    for (const auto& cls : m.classes())
        out.emplace_back(cls.kind, induced_cubie_perm(m, p, cls.kind).sign());
    return out;
}

/// Total corner twist (mod 3) or edge flip (mod 2) relative to the
/// reference stickers.
inline unsigned orientation_sum(const StickerModel& m, const Permutation& p, PieceKind kind)
{
    if (kind != PieceKind::corner && kind != PieceKind::edge)
        throw std::invalid_argument("orientation_sum is defined for corners and edges");
    auto st = read_class(m, p, kind);
    const unsigned mod = kind == PieceKind::corner ? 3 : 2;
    unsigned s = 0;
    for (unsigned o : st.orientation)
        s += o;
    return s % mod;
}

/// Order of the subgroup of {+1,-1}^k generated by the sign vectors of the
/// model's generators (k = number of classes).
inline std::size_t sign_image_order(const StickerModel& m)
{
    std::set<std::vector<int>> span{std::vector<int>(m.classes().size(), 1)};
    std::vector<std::vector<int>> gens;
    for (const auto& g : m.named_generators()) {
        std::vector<int> v;
        for (auto [k, s] : sign_vector(m, g.perm))
            v.push_back(s);
        gens.push_back(std::move(v));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& a : std::vector<std::vector<int>>(span.begin(), span.end()))
            for (const auto& g : gens) {
                std::vector<int> prod(a.size());
                for (std::size_t i = 0; i < a.size(); ++i)
                    prod[i] = a[i] * g[i];
                grew |= span.insert(prod).second;
            }
    }
    return span.size();
}

/// Configuration tuple of the Professor's cube: corner twists and places,
/// central-edge flips and places, and three S_24 components.
struct ConfigTuple {
    std::vector<unsigned> x;   // 8 corner twists in Z_3
    Permutation sigma_c;       // S_8
    std::vector<unsigned> y;   // 12 edge flips in Z_2
    Permutation sigma_e;       // S_12
    Permutation tau, rho_c, rho_e;  // S_24 each

    static ConfigTuple initial()
    {
        return {std::vector<unsigned>(8, 0), Permutation(8), std::vector<unsigned>(12, 0), Permutation(12),
                Permutation(24), Permutation(24), Permutation(24)};
    }
};

/// Which single-orbit class of 24 pieces each S_24 component describes.
struct ClassAssignment {
    PieceKind tau = PieceKind::x_center;
    PieceKind rho_c = PieceKind::plus_center;
    PieceKind rho_e = PieceKind::wing;

    friend bool operator==(const ClassAssignment&, const ClassAssignment&) = default;
};

inline void require_professor(const StickerModel& m)
{
    if (m.cube_size() != 5)
        throw std::invalid_argument("configuration tuples describe the 5x5x5 model");
}

inline ConfigTuple read_config(const StickerModel& m, const Permutation& p, const ClassAssignment& a = {})
{
    require_professor(m);
    auto corners = read_class(m, p, PieceKind::corner);
    auto edges = read_class(m, p, PieceKind::edge);
    auto perm_of = [&](PieceKind k) {
        auto st = read_class(m, p, k);
        for (unsigned o : st.orientation)
            if (o != 0)
                throw std::invalid_argument(std::string(kind_name(k)) + " piece in a flipped orientation");
        return st.perm;
    };
    return {corners.orientation, corners.perm, edges.orientation, edges.perm,
            perm_of(a.tau), perm_of(a.rho_c), perm_of(a.rho_e)};
}

inline Permutation encode_config(const StickerModel& m, const ConfigTuple& c, const ClassAssignment& a = {})
{
    require_professor(m);
    if (c.x.size() != 8 || c.y.size() != 12 || c.sigma_c.degree() != 8 || c.sigma_e.degree() != 12 ||
        c.tau.degree() != 24 || c.rho_c.degree() != 24 || c.rho_e.degree() != 24)
        throw std::invalid_argument("configuration tuple has the wrong shape");
    for (unsigned v : c.x)
        if (v > 2)
            throw std::invalid_argument("corner twist outside Z_3");
    for (unsigned v : c.y)
        if (v > 1)
            throw std::invalid_argument("edge flip outside Z_2");
    std::set<PieceKind> kinds{a.tau, a.rho_c, a.rho_e};
    if (kinds != std::set<PieceKind>{PieceKind::wing, PieceKind::plus_center, PieceKind::x_center})
        throw std::invalid_argument("class assignment must use wing, plus-center and x-center once each");
    std::vector<ClassState> state{
        {PieceKind::corner, c.sigma_c, c.x},
        {PieceKind::edge, c.sigma_e, c.y},
        {a.tau, c.tau, std::vector<unsigned>(24, 0)},
        {a.rho_c, c.rho_c, std::vector<unsigned>(24, 0)},
        {a.rho_e, c.rho_e, std::vector<unsigned>(24, 0)},
    };
    return encode_state(m, state);
}

struct ValidityReport {
    bool twist_sum_zero = false;   // sum x_i = 0 in Z_3
    bool flip_sum_zero = false;    // sum y_i = 0 in Z_2
    bool signs_equal = false;      // sign(sigma_c) = sign(sigma_e) = sign(tau)
    bool sign_product = false;     // sign(tau) = sign(rho_c) sign(rho_e)
    std::optional<bool> member;    // group membership of the encoded tuple, if requested

    bool valid() const { return twist_sum_zero && flip_sum_zero && signs_equal && sign_product; }
};

/// Evaluates the four validity conditions literally. With `group`, also
/// encodes the tuple as a sticker permutation and tests membership.
inline ValidityReport validity_check(const StickerModel& m, const ConfigTuple& c, const ClassAssignment& a = {},
                                     const GroupHandle* group = nullptr)
{
    require_professor(m);
    ValidityReport r;
    unsigned sx = 0, sy = 0;
    for (unsigned v : c.x)
        sx += v;
    for (unsigned v : c.y)
        sy += v;
    r.twist_sum_zero = sx % 3 == 0;
    r.flip_sum_zero = sy % 2 == 0;
    r.signs_equal = c.sigma_c.sign() == c.sigma_e.sign() && c.sigma_e.sign() == c.tau.sign();
    r.sign_product = c.tau.sign() == c.rho_c.sign() * c.rho_e.sign();
    if (group)
        r.member = group->contains(encode_config(m, c, a));
    return r;
}

/// All assignments of (tau, rho_c, rho_e) to the wing, plus-center and
/// x-center classes under which every generator satisfies the two sign
/// conditions.
inline std::vector<ClassAssignment> consistent_sign_assignments(const StickerModel& m)
{
    require_professor(m);
    std::vector<PieceKind> kinds{PieceKind::wing, PieceKind::plus_center, PieceKind::x_center};
    std::vector<ClassAssignment> out;
    std::sort(kinds.begin(), kinds.end());
    do {
        ClassAssignment a{kinds[0], kinds[1], kinds[2]};
        bool ok = true;
        for (const auto& g : m.named_generators()) {
            auto sgn = [&](PieceKind k) { return induced_cubie_perm(m, g.perm, k).sign(); };
            const int c = sgn(PieceKind::corner), e = sgn(PieceKind::edge), t = sgn(a.tau);
            ok = ok && c == e && e == t && t == sgn(a.rho_c) * sgn(a.rho_e);
        }
        if (ok)
            out.push_back(a);
    } while (std::next_permutation(kinds.begin(), kinds.end()));
    return out;
}

/// Every edge piece of the 3x3x3 model flipped in place.
inline Permutation superflip_stickers(const StickerModel& m)
{
    std::vector<Point> img(m.degree());
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto& block : m.sticker_class(PieceKind::edge).blocks) {
        if (block.size() != 2)
            throw std::logic_error("edge pieces must carry two stickers");
        img[block[0] - 1] = block[1] - 1;
        img[block[1] - 1] = block[0] - 1;
    }
    return Permutation::from_zero_based(std::move(img));
}

/// Image of a 3x3x3 sticker permutation in (C_3 wr S_8)^o x (C_2 wr S_12)^o.
inline CubeElement abstract_image(const StickerModel& m, const Permutation& p)
{
    if (m.cube_size() != 3)
        throw std::invalid_argument("abstract_image needs the 3x3x3 model");
    auto c = read_class(m, p, PieceKind::corner);
    auto e = read_class(m, p, PieceKind::edge);
    return {WreathElement{3, c.orientation, c.perm}, WreathElement{2, e.orientation, e.perm}};
}

}  // namespace cubegal
