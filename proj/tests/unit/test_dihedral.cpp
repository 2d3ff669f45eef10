#include "boxlike/dihedral.hpp"

#include <doctest.h>

#include <array>
#include <set>

using namespace boxlike;

TEST_CASE("the eight elements form a group") {
    // closure is implicit: compose throws if the product leaves the table
    for (Dihedral g : kAllDihedrals) {
        CHECK(compose(Dihedral::Id, g) == g);
        CHECK(compose(g, Dihedral::Id) == g);
        CHECK(compose(g, inverse(g)) == Dihedral::Id);
        CHECK(compose(inverse(g), g) == Dihedral::Id);
        for (Dihedral h : kAllDihedrals) CHECK_NOTHROW(compose(g, h));
    }

    // each row and column of the 8x8 table is a permutation
    for (Dihedral g : kAllDihedrals) {
        std::set<Dihedral> row, col;
        for (Dihedral h : kAllDihedrals) {
            row.insert(compose(g, h));
            col.insert(compose(h, g));
        }
        CHECK(row.size() == 8);
        CHECK(col.size() == 8);
    }
}

TEST_CASE("every matrix permutes the corners of the square") {
    const std::array<std::pair<int, int>, 4> corners = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (Dihedral g : kAllDihedrals) {
        const IsoMatrix m = matrix_of(g);
        std::set<std::pair<int, int>> images;
        for (const auto& [x, y] : corners) {
            images.insert({m.xx * x + m.xy * y, m.yx * x + m.yy * y});
        }
        for (const auto& c : corners) CHECK(images.count(c) == 1);
    }
}

TEST_CASE("swaps_axes holds exactly for the four axis-exchanging elements") {
    CHECK_FALSE(swaps_axes(Dihedral::Id));
    CHECK_FALSE(swaps_axes(Dihedral::Rot180));
    CHECK_FALSE(swaps_axes(Dihedral::ReflectH));
    CHECK_FALSE(swaps_axes(Dihedral::ReflectV));
    CHECK(swaps_axes(Dihedral::Rot90));
    CHECK(swaps_axes(Dihedral::Rot270));
    CHECK(swaps_axes(Dihedral::ReflectDiag));
    CHECK(swaps_axes(Dihedral::ReflectAnti));
}

TEST_CASE("rotation convention is clockwise") {
    // Rot90 sends (x,y) to (y,-x)
    const IsoMatrix m = matrix_of(Dihedral::Rot90);
    CHECK(m.xx == 0);
    CHECK(m.xy == 1);
    CHECK(m.yx == -1);
    CHECK(m.yy == 0);

    CHECK(compose(Dihedral::Rot90, Dihedral::Rot90) == Dihedral::Rot180);
    CHECK(compose(Dihedral::Rot90, Dihedral::Rot270) == Dihedral::Id);
    CHECK(compose(Dihedral::ReflectH, Dihedral::ReflectV) == Dihedral::Rot180);
}

TEST_CASE("names round-trip") {
    for (Dihedral g : kAllDihedrals) {
        const auto back = dihedral_from_name(dihedral_name(g));
        REQUIRE(back.has_value());
        CHECK(*back == g);
    }
    CHECK_FALSE(dihedral_from_name("rot45").has_value());
    CHECK_FALSE(dihedral_from_name("").has_value());
}
