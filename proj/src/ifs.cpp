#include "boxlike/ifs.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxlike {

int AffineMap::sign_x() const {
    const IsoMatrix m = matrix_of(iso);
    return m.xx != 0 ? m.xx : m.xy;
}

int AffineMap::sign_y() const {
    const IsoMatrix m = matrix_of(iso);
    return m.yy != 0 ? m.yy : m.yx;
}

std::pair<Rational, Rational> AffineMap::apply(const Rational& x, const Rational& y) const {
    const IsoMatrix m = matrix_of(iso);
    Rational lx = Rational(m.xx) * x + Rational(m.xy) * y;
    Rational ly = Rational(m.yx) * x + Rational(m.yy) * y;
    return {a * lx + tx, b * ly + ty};
}

std::optional<std::string> validate_map(const AffineMap& map) {
    const Rational zero(0), one(1);
    if (!(map.a > zero && map.a < one)) return "contraction a must lie in (0,1), got " + map.a.str();
    if (!(map.b > zero && map.b < one)) return "contraction b must lie in (0,1), got " + map.b.str();
    if (!contains(unit_square(), image_rect(map)))
        return "image rectangle " + image_rect(map).str() + " leaves the unit square";
    return std::nullopt;
}

std::optional<std::string> validate_ifs(const BoxLikeIFS& ifs) {
    if (ifs.size() < 2) return "an IFS needs at least 2 maps, got " + std::to_string(ifs.size());
    for (std::size_t i = 0; i < ifs.size(); ++i) {
        if (auto err = validate_map(ifs.maps[i]))
            return "map " + std::to_string(i) + ": " + *err;
    }
    return std::nullopt;
}

Rect image_rect(const AffineMap& map) {
    // The x extent is [tx, tx+a] when the map preserves the x direction and
    // [tx-a, tx] when it reverses it; likewise for y.
    const Rational x0 = map.sign_x() > 0 ? map.tx : map.tx - map.a;
    const Rational y0 = map.sign_y() > 0 ? map.ty : map.ty - map.b;
    return Rect{x0, x0 + map.a, y0, y0 + map.b};
}

AffineMap from_target_rect(Dihedral iso, const Rect& target) {
    if (!target.nondegenerate())
        throw std::invalid_argument("target rectangle " + target.str() + " is degenerate");
    if (!contains(unit_square(), target))
        throw std::invalid_argument("target rectangle " + target.str() + " leaves the unit square");
    AffineMap map;
    map.a = target.width();
    map.b = target.height();
    map.iso = iso;
    map.tx = map.sign_x() > 0 ? target.x0 : target.x0 + map.a;
    map.ty = map.sign_y() > 0 ? target.y0 : target.y0 + map.b;
    return map;
}

Rect map_rect(const AffineMap& map, const Rect& r) {
    const auto [px, py] = map.apply(r.x0, r.y0);
    const auto [qx, qy] = map.apply(r.x1, r.y1);
    return Rect{std::min(px, qx), std::max(px, qx), std::min(py, qy), std::max(py, qy)};
}

MapClass classify_map(const AffineMap& map) {
    return swaps_axes(map.iso) ? MapClass::B : MapClass::A;
}

SystemType classify_system(const BoxLikeIFS& ifs) {
    for (const AffineMap& m : ifs.maps) {
        if (classify_map(m) == MapClass::B) return SystemType::NonSeparated;
    }
    return SystemType::Separated;
}

SizeState extend_size(const SizeState& state, std::size_t letter, const BoxLikeIFS& ifs) {
    const AffineMap& m = ifs.maps.at(letter);
    const double la = m.a.log();
    const double lb = m.b.log();
    SizeState next;
    if (state.cls == MapClass::A) {
        next.log_base = state.log_base + la;
        next.log_height = state.log_height + lb;
    } else {
        next.log_base = state.log_base + lb;
        next.log_height = state.log_height + la;
    }
    if (swaps_axes(m.iso)) {
        next.cls = state.cls == MapClass::A ? MapClass::B : MapClass::A;
    } else {
        next.cls = state.cls;
    }
    return next;
}

WordSize word_size(std::span<const std::size_t> word, const BoxLikeIFS& ifs) {
    if (word.empty()) throw std::invalid_argument("word_size: empty word");
    SizeState state;
    for (std::size_t letter : word) state = extend_size(state, letter, ifs);
    return WordSize{
        std::max(state.log_base, state.log_height),
        std::min(state.log_base, state.log_height),
        state.cls,
    };
}

std::string RoscWitness::describe() const {
    if (kind == Kind::Containment)
        return "image of map " + std::to_string(map_i) + " is not contained in R";
    return "images of maps " + std::to_string(map_i) + " and " + std::to_string(map_j) + " overlap";
}

RoscResult check_rosc(const BoxLikeIFS& ifs, const Rect& r) {
    if (!r.nondegenerate()) throw std::invalid_argument("ROSC rectangle must be non-degenerate");
    std::vector<Rect> images;
    images.reserve(ifs.size());
    for (std::size_t i = 0; i < ifs.size(); ++i) {
        const Rect img = map_rect(ifs.maps[i], r);
        if (!contains(r, img)) {
            return RoscResult{false, RoscWitness{RoscWitness::Kind::Containment, i}};
        }
        images.push_back(img);
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            if (open_overlap(images[i], images[j])) {
                return RoscResult{false, RoscWitness{RoscWitness::Kind::Overlap, i, j}};
            }
        }
    }
    return RoscResult{true, std::nullopt};
}

}  // namespace boxlike
