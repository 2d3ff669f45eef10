#pragma once

#include "boxlike/dihedral.hpp"
#include "boxlike/geometry.hpp"
#include "boxlike/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace boxlike {

/// Orientation class of a map or word: A preserves the horizontal/vertical
/// split, B exchanges it.
enum class MapClass : std::uint8_t { A, B };

inline char map_class_char(MapClass c) { return c == MapClass::A ? 'A' : 'B'; }

/// One affine map S = T∘L + t with T = diag(a,b), L a square symmetry and t
/// a translation. The image of the unit square is an axis-parallel rectangle
/// of width a and height b.
struct AffineMap {
    Rational a, b;  // contraction ratios of T, both in (0,1)
    Dihedral iso = Dihedral::Id;
    Rational tx, ty;

    /// Sign of the single nonzero entry in the first / second row of
    /// diag(a,b)·L. Determines whether the map reverses each axis.
    int sign_x() const;
    int sign_y() const;

    /// Exact image of a point.
    std::pair<Rational, Rational> apply(const Rational& x, const Rational& y) const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct BoxLikeIFS {
    std::vector<AffineMap> maps;
    std::size_t size() const { return maps.size(); }
};

/// Empty when valid; otherwise a description of the violated invariant.
std::optional<std::string> validate_map(const AffineMap& map);
std::optional<std::string> validate_ifs(const BoxLikeIFS& ifs);

/// The unique map with the given isometry whose image of the unit square is
/// `target`. Throws std::invalid_argument on a degenerate target or one that
/// leaves the unit square.
AffineMap from_target_rect(Dihedral iso, const Rect& target);

/// Exact image of the unit square: width a, height b.
Rect image_rect(const AffineMap& map);

/// Exact image of an arbitrary rectangle.
Rect map_rect(const AffineMap& map, const Rect& r);

MapClass classify_map(const AffineMap& map);

enum class SystemType : std::uint8_t { Separated, NonSeparated };

/// Separated iff no map exchanges the axes.
SystemType classify_system(const BoxLikeIFS& ifs);

/// Side lengths of the image rectangle of a word, tracked in log domain so
/// arbitrarily long words do not underflow.
struct SizeState {
    MapClass cls = MapClass::A;
    double log_base = 0.0;
    double log_height = 0.0;
};

/// Appends one letter on the right of the word.
SizeState extend_size(const SizeState& state, std::size_t letter, const BoxLikeIFS& ifs);

struct WordSize {
    double log_alpha1;  // log of the longer side
    double log_alpha2;  // log of the shorter side
    MapClass cls;
};

/// Singular values of the composed linear part, read off the side lengths of
/// the image rectangle.
WordSize word_size(std::span<const std::size_t> word, const BoxLikeIFS& ifs);

struct RoscWitness {
    enum class Kind : std::uint8_t { Containment, Overlap };
    Kind kind;
    std::size_t map_i = 0;
    std::size_t map_j = 0;  // only for Overlap
    std::string describe() const;
};

struct RoscResult {
    bool satisfied;
    std::optional<RoscWitness> witness;
};

/// Rectangular open set condition for the open rectangle R: every image
/// S_i(R) must lie inside R and the open images must be pairwise disjoint.
/// All predicates are evaluated in exact rational arithmetic.
RoscResult check_rosc(const BoxLikeIFS& ifs, const Rect& r);

}  // namespace boxlike
