#include "boxlike/projections.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace boxlike {

namespace {

auto edge_key(const ProjEdge& e) {
    return std::make_tuple(e.src, e.dst, e.map.ratio, e.map.offset, e.map.reflected, e.map_index);
}

bool edge_less(const ProjEdge& a, const ProjEdge& b) { return edge_key(a) < edge_key(b); }

bool same_line_map(const ProjEdge& a, const ProjEdge& b) {
    return a.src == b.src && a.dst == b.dst && a.map == b.map;
}

void canonicalize(std::vector<ProjEdge>& edges) {
    std::sort(edges.begin(), edges.end(), edge_less);
}

// x ↦ 1-x conjugations. With e(x) = σ·ρ·x + o:
//   e∘r(x)   = -σρ·x + (o + σρ)        (pre-compose, edge out of the node)
//   r∘e(x)   = -σρ·x + (1 - o)         (post-compose, edge into the node)
//   r∘e∘r(x) =  σρ·x + (1 - o - σρ)    (loop at the node)
LineMap pre_reflect(const LineMap& m) {
    const Rational signed_ratio = m.reflected ? -m.ratio : m.ratio;
    return LineMap{m.ratio, m.offset + signed_ratio, !m.reflected};
}

LineMap post_reflect(const LineMap& m) {
    return LineMap{m.ratio, Rational(1) - m.offset, !m.reflected};
}

LineMap conjugate_loop(const LineMap& m) {
    const Rational signed_ratio = m.reflected ? -m.ratio : m.ratio;
    return LineMap{m.ratio, Rational(1) - m.offset - signed_ratio, m.reflected};
}

std::vector<ProjEdge> conjugate_at(const std::vector<ProjEdge>& edges, Axis node) {
    std::vector<ProjEdge> out = edges;
    for (ProjEdge& e : out) {
        if (e.src == node && e.dst == node) e.map = conjugate_loop(e.map);
        else if (e.src == node) e.map = pre_reflect(e.map);
        else if (e.dst == node) e.map = post_reflect(e.map);
    }
    canonicalize(out);
    return out;
}

bool edge_multisets_equal(const std::vector<ProjEdge>& a, const std::vector<ProjEdge>& b) {
    // both canonically sorted; compare line maps only (map_index is metadata)
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!same_line_map(a[i], b[i])) return false;
    }
    return true;
}

// Open intervals pairwise disjoint (shared endpoints allowed).
bool interiors_disjoint(std::vector<std::pair<Rational, Rational>> intervals) {
    std::sort(intervals.begin(), intervals.end());
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].first < intervals[i - 1].second) return false;
    }
    return true;
}

}  // namespace

std::pair<Rational, Rational> LineMap::interval() const {
    if (reflected) return {offset - ratio, offset};
    return {offset, offset + ratio};
}

std::string LineMap::str() const {
    return std::string(reflected ? "-" : "+") + ratio.str() + "*x + " + offset.str();
}

std::string ProjEdge::str() const {
    return std::string(1, axis_char(src)) + "->" + axis_char(dst) + " [" + map.str() + "] (map " +
           std::to_string(map_index) + ")";
}

std::vector<const ProjEdge*> ProjectionSystem::edges_into(Axis node) const {
    std::vector<const ProjEdge*> out;
    for (const ProjEdge& e : edges)
        if (e.dst == node) out.push_back(&e);
    return out;
}

std::vector<const ProjEdge*> ProjectionSystem::edges_from(Axis node) const {
    std::vector<const ProjEdge*> out;
    for (const ProjEdge& e : edges)
        if (e.src == node) out.push_back(&e);
    return out;
}

bool ProjectionSystem::has_cross_edges() const {
    for (const ProjEdge& e : edges)
        if (e.src != e.dst) return true;
    return false;
}

ProjectionSystem build_projection_system(const BoxLikeIFS& ifs) {
    ProjectionSystem sys;
    for (std::size_t i = 0; i < ifs.size(); ++i) {
        const AffineMap& m = ifs.maps[i];
        const LineMap horizontal{m.a, m.tx, m.sign_x() < 0};
        const LineMap vertical{m.b, m.ty, m.sign_y() < 0};
        if (classify_map(m) == MapClass::A) {
            sys.edges.push_back(ProjEdge{Axis::X, Axis::X, horizontal, i});
            sys.edges.push_back(ProjEdge{Axis::Y, Axis::Y, vertical, i});
        } else {
            // the x extent of the image is driven by the y coordinate and vice versa
            sys.edges.push_back(ProjEdge{Axis::Y, Axis::X, horizontal, i});
            sys.edges.push_back(ProjEdge{Axis::X, Axis::Y, vertical, i});
        }
    }
    canonicalize(sys.edges);
    return sys;
}

ProjectionSystem reduce_system(const ProjectionSystem& sys) {
    ProjectionSystem out;
    out.symmetric = sys.symmetric;
    out.dedupe_log = sys.dedupe_log;

    // 1) literal duplicates
    std::vector<ProjEdge> edges = sys.edges;
    canonicalize(edges);
    std::vector<ProjEdge> unique;
    for (const ProjEdge& e : edges) {
        if (!unique.empty() && same_line_map(unique.back(), e)) {
            out.dedupe_log.push_back("duplicate: dropped " + e.str() + ", identical to " +
                                     unique.back().str());
            continue;
        }
        unique.push_back(e);
    }

    // 2) reflection-symmetry detection per node
    for (Axis node : {Axis::X, Axis::Y}) {
        const auto conj = conjugate_at(unique, node);
        if (edge_multisets_equal(conj, unique)) {
            out.symmetric[static_cast<std::size_t>(node)] = true;
        }
    }

    // 3) mirror merges out of symmetric source nodes: e and e∘r have the same
    //    image set when the node's set is reflection invariant
    std::vector<ProjEdge> merged;
    std::vector<bool> dropped(unique.size(), false);
    for (std::size_t i = 0; i < unique.size(); ++i) {
        if (dropped[i]) continue;
        const ProjEdge& e = unique[i];
        if (out.symmetric[static_cast<std::size_t>(e.src)]) {
            ProjEdge mirror = e;
            mirror.map = pre_reflect(e.map);
            for (std::size_t j = i + 1; j < unique.size(); ++j) {
                if (dropped[j]) continue;
                if (same_line_map(unique[j], mirror)) {
                    dropped[j] = true;
                    out.dedupe_log.push_back("mirror merge at symmetric node " +
                                             std::string(1, axis_char(e.src)) + ": dropped " +
                                             unique[j].str() + ", same image as " + e.str());
                    break;
                }
            }
        }
        merged.push_back(e);
    }
    canonicalize(merged);
    out.edges = std::move(merged);
    return out;
}

RootResult solve_moran(const std::vector<Rational>& ratios) {
    if (ratios.empty()) throw std::invalid_argument("solve_moran: empty ratio list");
    std::vector<double> r;
    r.reserve(ratios.size());
    for (const Rational& q : ratios) r.push_back(q.to_double());
    const auto f = [&r](double s) {
        double sum = 0;
        for (double ri : r) sum += std::pow(ri, s);
        return sum;
    };
    if (f(1.0) > 1.0) return {1.0, true};
    if (f(0.0) <= 1.0) return {0.0, false};  // single ratio
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 1.0 ? lo : hi) = mid;
    }
    return {0.5 * (lo + hi), false};
}

double spectral_radius(const std::array<std::array<double, 2>, 2>& m) {
    const double tr = m[0][0] + m[1][1];
    const double disc = (m[0][0] - m[1][1]) * (m[0][0] - m[1][1]) + 4.0 * m[0][1] * m[1][0];
    return 0.5 * (tr + std::sqrt(disc));
}

RootResult solve_gd_dimension(const ProjectionSystem& reduced) {
    bool xy = false, yx = false;
    for (const ProjEdge& e : reduced.edges) {
        if (e.src == Axis::X && e.dst == Axis::Y) xy = true;
        if (e.src == Axis::Y && e.dst == Axis::X) yx = true;
    }
    if (!xy || !yx)
        throw std::invalid_argument(
            "adjacency matrix is reducible; solve each node with solve_moran instead");

    std::array<std::array<std::vector<double>, 2>, 2> ratios;  // [dst][src]
    for (const ProjEdge& e : reduced.edges) {
        ratios[static_cast<std::size_t>(e.dst)][static_cast<std::size_t>(e.src)].push_back(
            e.map.ratio.to_double());
    }
    const auto rho = [&ratios](double t) {
        std::array<std::array<double, 2>, 2> m{};
        for (int d = 0; d < 2; ++d)
            for (int s = 0; s < 2; ++s)
                for (double r : ratios[d][s]) m[d][s] += std::pow(r, t);
        return spectral_radius(m);
    };

    double lo = 0.0, hi = 1.0;
    if (rho(lo) <= 1.0) return {0.0, false};
    while (rho(hi) > 1.0) {
        hi += 1.0;
        if (hi > 64.0) throw std::logic_error("solve_gd_dimension: no root below 64");
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (rho(mid) > 1.0 ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    if (t > 1.0) return {1.0, true};
    return {t, false};
}

bool detect_block_type(const BoxLikeIFS& ifs) {
    std::vector<std::pair<Rational, Rational>> xs, ys;
    for (const AffineMap& m : ifs.maps) {
        const Rect img = image_rect(m);
        xs.emplace_back(img.x0, img.x1);
        ys.emplace_back(img.y0, img.y1);
    }
    const Rational zero(0), one(1);
    return intervals_cover(std::move(xs), zero, one) && intervals_cover(std::move(ys), zero, one);
}

std::string_view proj_method_name(ProjMethod m) {
    switch (m) {
        case ProjMethod::Moran: return "moran";
        case ProjMethod::GraphDirected: return "graph_directed";
        case ProjMethod::BlockType: return "block_type";
        case ProjMethod::Override: return "override";
    }
    return "?";
}

ProjectionDims projection_dims(const BoxLikeIFS& ifs, const DimOverrides& overrides) {
    ProjectionDims out;

    const ProjectionSystem reduced = reduce_system(build_projection_system(ifs));
    out.dedupe_log = reduced.dedupe_log;

    // 1-D open set condition after reduction: within each node, the pieces
    // composing the node's set must have pairwise disjoint interiors.
    bool osc = true;
    for (Axis node : {Axis::X, Axis::Y}) {
        std::vector<std::pair<Rational, Rational>> pieces;
        for (const ProjEdge* e : reduced.edges_into(node)) pieces.push_back(e->map.interval());
        if (!interiors_disjoint(std::move(pieces))) osc = false;
    }

    bool clamped = false;
    if (detect_block_type(ifs)) {
        out.s1 = out.s2 = 1.0;
        out.method_s1 = out.method_s2 = ProjMethod::BlockType;
        out.rigorous = true;  // projections are full intervals; no OSC needed
    } else if (classify_system(ifs) == SystemType::Separated) {
        for (Axis node : {Axis::X, Axis::Y}) {
            std::vector<Rational> ratios;
            for (const ProjEdge* e : reduced.edges_into(node)) ratios.push_back(e->map.ratio);
            const RootResult root = solve_moran(ratios);
            clamped = clamped || root.clamped;
            (node == Axis::X ? out.s1 : out.s2) = root.value;
        }
        out.method_s1 = out.method_s2 = ProjMethod::Moran;
        out.rigorous = osc;
    } else {
        const RootResult root = solve_gd_dimension(reduced);
        clamped = root.clamped;
        out.s1 = out.s2 = root.value;
        out.method_s1 = out.method_s2 = ProjMethod::GraphDirected;
        out.rigorous = osc;
    }

    if (!out.rigorous) {
        out.warnings.push_back(
            "projection pieces overlap after reduction; s1/s2 are OSC-assumed upper bounds");
    }
    if (clamped) {
        out.warnings.push_back("unclamped projection root exceeded 1; clamped (overlap indicator)");
    }

    if (overrides.s1) {
        out.s1 = *overrides.s1;
        out.method_s1 = ProjMethod::Override;
    }
    if (overrides.s2) {
        out.s2 = *overrides.s2;
        out.method_s2 = ProjMethod::Override;
    }
    if (overrides.s1 || overrides.s2) {
        out.rigorous = false;
        out.warnings.push_back("projection dimensions supplied by override; not verified");
        if (classify_system(ifs) == SystemType::NonSeparated && out.s1 != out.s2) {
            out.warnings.push_back(
                "overrides give s1 != s2, but non-separated systems force s1 = s2");
        }
    }
    return out;
}

}  // namespace boxlike
