#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace boxlike {

/// The 8 linear isometries of the plane that map the square [-1,1]^2 onto
/// itself. Rotations are clockwise, so Rot90 sends (x,y) to (y,-x).
enum class Dihedral : std::uint8_t {
    Id,
    Rot90,
    Rot180,
    Rot270,
    ReflectH,     // reflection in the horizontal axis: (x,y) -> (x,-y)
    ReflectV,     // reflection in the vertical axis:   (x,y) -> (-x,y)
    ReflectDiag,  // reflection in y = x:               (x,y) -> (y,x)
    ReflectAnti,  // reflection in y = -x:              (x,y) -> (-y,-x)
};

inline constexpr std::array<Dihedral, 8> kAllDihedrals = {
    Dihedral::Id,       Dihedral::Rot90,    Dihedral::Rot180,      Dihedral::Rot270,
    Dihedral::ReflectH, Dihedral::ReflectV, Dihedral::ReflectDiag, Dihedral::ReflectAnti,
};

/// Row-major 2x2 matrix with entries in {-1,0,1}.
struct IsoMatrix {
    std::int8_t xx, xy, yx, yy;
    friend bool operator==(const IsoMatrix&, const IsoMatrix&) = default;
};

IsoMatrix matrix_of(Dihedral g);

/// True exactly when g maps horizontal lines to vertical lines, i.e. the
/// matrix has zero diagonal.
bool swaps_axes(Dihedral g);

/// Group composition g∘h (apply h first).
Dihedral compose(Dihedral g, Dihedral h);

Dihedral inverse(Dihedral g);

/// Canonical lowercase name: "id", "rot90", ..., "reflect_anti".
std::string_view dihedral_name(Dihedral g);

std::optional<Dihedral> dihedral_from_name(std::string_view name);

}  // namespace boxlike
