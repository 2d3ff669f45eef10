#pragma once

#include "boxlike/ifs.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace boxlike {

/// Node of the projection system: X carries the horizontal projection of the
/// attractor, Y the vertical one.
enum class Axis : std::uint8_t { X, Y };

inline char axis_char(Axis n) { return n == Axis::X ? 'X' : 'Y'; }

/// 1-D similarity x ↦ ±ratio·x + offset with ratio in (0,1).
struct LineMap {
    Rational ratio;
    Rational offset;
    bool reflected = false;  // true: x ↦ -ratio·x + offset

    /// Exact image of [0,1].
    std::pair<Rational, Rational> interval() const;

    friend bool operator==(const LineMap&, const LineMap&) = default;
    std::string str() const;
};

struct ProjEdge {
    Axis src, dst;
    LineMap map;
    std::size_t map_index;  // originating IFS map

    std::string str() const;
};

/// Graph-directed system of 1-D similarities on the two projection nodes.
struct ProjectionSystem {
    std::vector<ProjEdge> edges;  // kept in canonical sort order
    std::array<bool, 2> symmetric{false, false};  // [X], [Y]: node set invariant under x ↦ 1-x
    std::vector<std::string> dedupe_log;

    std::vector<const ProjEdge*> edges_into(Axis node) const;
    std::vector<const ProjEdge*> edges_from(Axis node) const;
    bool has_cross_edges() const;
};

/// Projects every IFS map onto both axes: class-A maps yield X→X and Y→Y
/// edges, class-B maps yield Y→X and X→Y edges. Offsets and orientations are
/// derived exactly from the map's action on the axis segments.
ProjectionSystem build_projection_system(const BoxLikeIFS& ifs);

/// Applies the two sound reductions: removal of literal duplicate edges, and
/// merging of mirror pairs out of a node whose edge multiset is invariant
/// under conjugation by x ↦ 1-x. Idempotent; every removal is logged.
ProjectionSystem reduce_system(const ProjectionSystem& sys);

struct RootResult {
    double value;
    bool clamped;  // true when the unclamped root exceeded the cap
};

/// Solves Σ ratio_i^s = 1 by bisection, clamped to [0,1].
RootResult solve_moran(const std::vector<Rational>& ratios);

/// Perron root of a nonnegative 2x2 matrix (closed form).
double spectral_radius(const std::array<std::array<double, 2>, 2>& m);

/// Unique t with ρ(A^(t)) = 1 for the reduced system's adjacency matrix
/// A^(t)[n][n'] = Σ over edges n'→n of ratio^t. Throws std::invalid_argument
/// when the matrix is reducible (no cross edges): solve each node by
/// solve_moran instead.
RootResult solve_gd_dimension(const ProjectionSystem& reduced);

/// True when the image rectangles cover the full horizontal and vertical
/// extents of the unit square, which forces both projections to be intervals.
bool detect_block_type(const BoxLikeIFS& ifs);

enum class ProjMethod : std::uint8_t { Moran, GraphDirected, BlockType, Override };

std::string_view proj_method_name(ProjMethod m);

struct ProjectionDims {
    double s1 = 0.0, s2 = 0.0;
    ProjMethod method_s1 = ProjMethod::Moran;
    ProjMethod method_s2 = ProjMethod::Moran;
    bool rigorous = false;   // 1-D open set condition verified exactly after reduction
    std::vector<std::string> dedupe_log;
    std::vector<std::string> warnings;
};

struct DimOverrides {
    std::optional<double> s1, s2;
};

/// Dimension of both axis projections. Precedence: overrides, block type,
/// per-axis Moran roots (separated systems), graph-directed root
/// (non-separated systems, where s1 = s2).
ProjectionDims projection_dims(const BoxLikeIFS& ifs, const DimOverrides& overrides = {});

}  // namespace boxlike
