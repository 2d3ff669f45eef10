#include "boxlike/dihedral.hpp"

#include <stdexcept>

namespace boxlike {

namespace {

constexpr std::array<IsoMatrix, 8> kMatrices = {{
    {1, 0, 0, 1},    // Id
    {0, 1, -1, 0},   // Rot90 (clockwise)
    {-1, 0, 0, -1},  // Rot180
    {0, -1, 1, 0},   // Rot270
    {1, 0, 0, -1},   // ReflectH
    {-1, 0, 0, 1},   // ReflectV
    {0, 1, 1, 0},    // ReflectDiag
    {0, -1, -1, 0},  // ReflectAnti
}};

constexpr std::array<std::string_view, 8> kNames = {
    "id", "rot90", "rot180", "rot270", "reflect_h", "reflect_v", "reflect_diag", "reflect_anti",
};

}  // namespace

IsoMatrix matrix_of(Dihedral g) { return kMatrices[static_cast<std::size_t>(g)]; }

bool swaps_axes(Dihedral g) {
    const IsoMatrix m = matrix_of(g);
    return m.xx == 0 && m.yy == 0;
}

Dihedral compose(Dihedral g, Dihedral h) {
    const IsoMatrix a = matrix_of(g);
    const IsoMatrix b = matrix_of(h);
    const IsoMatrix p{
        static_cast<std::int8_t>(a.xx * b.xx + a.xy * b.yx),
        static_cast<std::int8_t>(a.xx * b.xy + a.xy * b.yy),
        static_cast<std::int8_t>(a.yx * b.xx + a.yy * b.yx),
        static_cast<std::int8_t>(a.yx * b.xy + a.yy * b.yy),
    };
    for (Dihedral d : kAllDihedrals) {
        if (matrix_of(d) == p) return d;
    }
    throw std::logic_error("dihedral composition left the group");
}

Dihedral inverse(Dihedral g) {
    for (Dihedral d : kAllDihedrals) {
        if (compose(g, d) == Dihedral::Id) return d;
    }
    throw std::logic_error("dihedral element without inverse");
}

std::string_view dihedral_name(Dihedral g) { return kNames[static_cast<std::size_t>(g)]; }

std::optional<Dihedral> dihedral_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return static_cast<Dihedral>(i);
    }
    return std::nullopt;
}

}  // namespace boxlike
