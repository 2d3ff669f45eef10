#pragma once

#include "boxlike/ifs.hpp"

#include <array>
#include <string>
#include <vector>

namespace boxlike {

/// Image of the unit square under one length-k composition: the four corners
/// are the exact images of (0,0), (1,0), (1,1), (0,1), in that order.
struct OrientedRect {
    std::array<std::pair<Rational, Rational>, 4> corners;
    int depth = 0;
    std::vector<std::size_t> word;

    /// Axis-parallel bounding box (equals the rectangle itself).
    Rect bounds() const;
};

inline constexpr int kDefaultDepthGuard = 10;

/// All m^k rectangles S_w([0,1]^2) for |w| = k, in lexicographic word order,
/// computed with exact rational corner mapping. Throws when k exceeds the
/// guard.
std::vector<OrientedRect> level_rects(const BoxLikeIFS& ifs, int k,
                                      int depth_guard = kDefaultDepthGuard);

struct SvgStyle {
    int viewport = 800;          // output is viewport x viewport pixels
    std::string fill = "#1f4e79";
    double opacity = 1.0;
};

/// Deterministic SVG: the unit square maps to the viewport with the y axis
/// flipped so (0,0) renders bottom-left. Identical inputs give byte-identical
/// output.
std::string render_svg(const std::vector<OrientedRect>& rects, const SvgStyle& style = {});

/// Writes render_svg output to a file; I/O failures carry the path.
void emit_svg(const std::vector<OrientedRect>& rects, const std::string& path,
              const SvgStyle& style = {});

}  // namespace boxlike
