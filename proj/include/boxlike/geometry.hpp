#pragma once

#include "boxlike/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace boxlike {

/// Axis-parallel rectangle [x0,x1] x [y0,y1] with exact corners.
struct Rect {
    Rational x0, x1, y0, y1;

    Rational width() const { return x1 - x0; }
    Rational height() const { return y1 - y0; }
    bool valid() const { return x0 <= x1 && y0 <= y1; }
    bool nondegenerate() const { return x0 < x1 && y0 < y1; }

    friend bool operator==(const Rect&, const Rect&) = default;

    std::string str() const;
};

inline Rect unit_square() { return Rect{Rational(0), Rational(1), Rational(0), Rational(1)}; }

/// Closed containment: inner ⊆ outer.
bool contains(const Rect& outer, const Rect& inner);

/// True when the interiors intersect. Shared edges do not count.
bool open_overlap(const Rect& a, const Rect& b);

/// Exact check that the union of the closed intervals equals [lo, hi].
bool intervals_cover(std::vector<std::pair<Rational, Rational>> intervals,
                     const Rational& lo, const Rational& hi);

}  // namespace boxlike
