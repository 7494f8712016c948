#pragma once
// Static sticker tables.
//
// Professor's cube (5x5x5): 144 labelled stickers. Labels 1..96 extend the
// Revenge cube (4x4x4) labelling; 97..144 are the central cross of each face.
// The face centres are fixed and unlabelled (0 in the nets below).
//
// Rubik's cube (3x3x3): the usual 48-sticker labelling with face centres
// unlabelled, faces U, L, F, R, B, D numbered 1-8, 9-16, ... row by row.

#include <array>
#include <cstdint>
#include <string_view>

namespace cubegal::data {

struct NamedCycles {
    std::string_view name;
    std::string_view cycles;
};

inline constexpr std::array<NamedCycles, 12> kProfessorGenerators{{
    {"r1", "(40 88 9 96)(28 76 21 84)(16 64 33 72)(4 52 45 60)(41 5 8 44)"
           "(42 17 7 32)(43 29 6 20)(18 19 31 30)(101 127 104 126)"
           "(98 128 107 125)(124 136 129 144)"},
    {"r2", "(39 87 10 95)(27 75 22 83)(15 63 34 71)(3 51 46 59)(123 135 130 143)"},
    {"b1", "(52 53 93 44)(51 65 94 32)(50 77 95 20)(49 89 96 8)(9 12 48 45)"
           "(10 24 47 33)(11 36 46 21)(22 23 35 34)(99 132 108 129)"
           "(102 131 105 130)(109 137 120 128)"},
    {"b2", "(54 81 43 64)(66 82 31 63)(78 83 19 62)(90 84 7 61)(138 117 127 112)"},
    {"d1", "(57 60 96 93)(58 72 95 81)(59 84 94 69)(70 71 83 82)(45 89 37 41)"
           "(46 90 38 42)(47 91 39 43)(48 92 40 44)(111 144 120 141)"
           "(114 143 117 142)(108 119 106 107)"},
    {"d2", "(33 77 25 29)(34 78 26 30)(35 79 27 31)(36 80 28 32)(105 116 103 104)"},
    {"u1", "(49 52 88 85)(62 63 75 74)(50 64 87 73)(51 76 86 61)(5 1 53 9)"
           "(6 2 54 10)(7 3 55 11)(8 4 56 12)(109 136 118 133)"
           "(112 135 115 134)(98 97 110 99)"},
    {"u2", "(17 13 65 21)(18 14 66 22)(19 15 67 23)(20 16 68 24)(101 100 113 102)"},
    {"l1", "(57 48 49 1)(69 36 61 13)(81 24 73 25)(93 12 85 37)(89 53 56 92)"
           "(90 65 55 80)(91 77 54 68)(66 67 79 78)(110 140 119 137)"
           "(113 139 116 138)(132 133 121 141)"},
    {"l2", "(94 11 86 38)(82 23 74 26)(70 35 62 14)(58 47 50 2)(131 134 122 142)"},
    {"f1", "(85 5 60 92)(86 17 59 80)(87 29 58 68)(88 41 57 56)(1 4 40 37)"
           "(2 16 39 25)(3 28 38 13)(14 15 27 26)(100 123 103 122)"
           "(97 124 106 121)(118 125 111 140)"},
    {"f2", "(73 6 72 91)(74 18 71 79)(75 30 70 67)(76 42 69 55)(115 126 114 139)"},
}};

/// FNV-1a (64-bit) over the generator tables, names and cycles, each entry
/// terminated by '\n'. Any edit to the tables changes it.
inline constexpr std::uint64_t kProfessorGeneratorsChecksum = 0x118554db9e5704bcULL;

struct Face {
    char name;
    // rows top to bottom as drawn in the unfolded net, 0 = unlabelled centre
    std::array<std::array<std::uint16_t, 5>, 5> rows;
};

/// Unfolded net of the Professor's cube: L F R B in a row, U above F, D below F.
inline constexpr std::array<Face, 6> kProfessorNet{{
    {'L', {{{53, 54, 110, 55, 56}, {65, 66, 113, 67, 68}, {137, 138, 0, 139, 140},
            {77, 78, 116, 79, 80}, {89, 90, 119, 91, 92}}}},
    {'F', {{{1, 2, 97, 3, 4}, {13, 14, 100, 15, 16}, {121, 122, 0, 123, 124},
            {25, 26, 103, 27, 28}, {37, 38, 106, 39, 40}}}},
    {'R', {{{5, 6, 98, 7, 8}, {17, 18, 101, 19, 20}, {125, 126, 0, 127, 128},
            {29, 30, 104, 31, 32}, {41, 42, 107, 43, 44}}}},
    {'B', {{{9, 10, 99, 11, 12}, {21, 22, 102, 23, 24}, {129, 130, 0, 131, 132},
            {33, 34, 105, 35, 36}, {45, 46, 108, 47, 48}}}},
    {'U', {{{49, 50, 109, 51, 52}, {61, 62, 112, 63, 64}, {133, 134, 0, 135, 136},
            {73, 74, 115, 75, 76}, {85, 86, 118, 87, 88}}}},
    {'D', {{{57, 58, 111, 59, 60}, {69, 70, 114, 71, 72}, {141, 142, 0, 143, 144},
            {81, 82, 117, 83, 84}, {93, 94, 120, 95, 96}}}},
}};

/// Quarter turns of the six faces of the Rubik's cube on 48 stickers.
inline constexpr std::array<NamedCycles, 6> kRubikGenerators{{
    {"U", "(1 3 8 6)(2 5 7 4)(9 33 25 17)(10 34 26 18)(11 35 27 19)"},
    {"L", "(9 11 16 14)(10 13 15 12)(1 17 41 40)(4 20 44 37)(6 22 46 35)"},
    {"F", "(17 19 24 22)(18 21 23 20)(6 25 43 16)(7 28 42 13)(8 30 41 11)"},
    {"R", "(25 27 32 30)(26 29 31 28)(3 38 43 19)(5 36 45 21)(8 33 48 24)"},
    {"B", "(33 35 40 38)(34 37 39 36)(3 9 46 32)(2 12 47 29)(1 14 48 27)"},
    {"D", "(41 43 48 46)(42 45 47 44)(14 22 30 38)(15 23 31 39)(16 24 32 40)"},
}};

/// Rubik's cube net in the same layout as the Professor's net (3x3 faces).
struct Face3 {
    char name;
    std::array<std::array<std::uint16_t, 3>, 3> rows;
};

inline constexpr std::array<Face3, 6> kRubikNet{{
    {'U', {{{1, 2, 3}, {4, 0, 5}, {6, 7, 8}}}},
    {'L', {{{9, 10, 11}, {12, 0, 13}, {14, 15, 16}}}},
    {'F', {{{17, 18, 19}, {20, 0, 21}, {22, 23, 24}}}},
    {'R', {{{25, 26, 27}, {28, 0, 29}, {30, 31, 32}}}},
    {'B', {{{33, 34, 35}, {36, 0, 37}, {38, 39, 40}}}},
    {'D', {{{41, 42, 43}, {44, 0, 45}, {46, 47, 48}}}},
}};

inline constexpr std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL)
{
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <std::size_t N>
constexpr std::uint64_t table_checksum(const std::array<NamedCycles, N>& table)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& g : table) {
        h = fnv1a(g.name, h);
        h = fnv1a(" ", h);
        h = fnv1a(g.cycles, h);
        h = fnv1a("\n", h);
    }
    return h;
}

static_assert(table_checksum(kProfessorGenerators) == kProfessorGeneratorsChecksum,
              "Professor's cube generator table was edited");

}  // namespace cubegal::data
