#include "boxlike/render.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace boxlike {

namespace {

struct ExactAffine {
    // 2x2 rational matrix (row-major) and translation; always signed-diagonal
    // or signed-antidiagonal for box-like compositions
    Rational xx, xy, yx, yy, tx, ty;

    static ExactAffine identity() {
        return ExactAffine{Rational(1), Rational(0), Rational(0), Rational(1), Rational(0),
                           Rational(0)};
    }

    static ExactAffine of(const AffineMap& m) {
        const IsoMatrix iso = matrix_of(m.iso);
        return ExactAffine{m.a * Rational(iso.xx), m.a * Rational(iso.xy),
                           m.b * Rational(iso.yx), m.b * Rational(iso.yy), m.tx, m.ty};
    }

    ExactAffine then_inner(const ExactAffine& inner) const {
        // this ∘ inner
        return ExactAffine{
            xx * inner.xx + xy * inner.yx, xx * inner.xy + xy * inner.yy,
            yx * inner.xx + yy * inner.yx, yx * inner.xy + yy * inner.yy,
            xx * inner.tx + xy * inner.ty + tx, yx * inner.tx + yy * inner.ty + ty};
    }

    std::pair<Rational, Rational> apply(const Rational& x, const Rational& y) const {
        return {xx * x + xy * y + tx, yx * x + yy * y + ty};
    }
};

void collect(const BoxLikeIFS& ifs, const ExactAffine& prefix, std::vector<std::size_t>& word,
             int depth, int target, std::vector<OrientedRect>& out) {
    if (depth == target) {
        OrientedRect r;
        r.depth = target;
        r.word = word;
        r.corners[0] = prefix.apply(Rational(0), Rational(0));
        r.corners[1] = prefix.apply(Rational(1), Rational(0));
        r.corners[2] = prefix.apply(Rational(1), Rational(1));
        r.corners[3] = prefix.apply(Rational(0), Rational(1));
        out.push_back(std::move(r));
        return;
    }
    for (std::size_t l = 0; l < ifs.size(); ++l) {
        word.push_back(l);
        collect(ifs, prefix.then_inner(ExactAffine::of(ifs.maps[l])), word, depth + 1, target, out);
        word.pop_back();
    }
}

// Exact decimal rendering of value*scale with at most 6 fractional digits,
// round half up, trailing zeros trimmed. Keeps output byte-stable.
std::string pixel_coord(const Rational& value, int scale) {
    const Rational scaled = value * Rational(scale);
    mpz_class num = scaled.num();
    mpz_class den = scaled.den();
    const bool negative = num < 0;
    if (negative) num = -num;

    mpz_class pow6 = 1;
    for (int i = 0; i < 6; ++i) pow6 *= 10;
    // round(num/den * 10^6)
    mpz_class q = (num * pow6 * 2 + den) / (den * 2);

    mpz_class whole = q / pow6;
    mpz_class frac = q % pow6;
    std::string out = (negative && (whole != 0 || frac != 0)) ? "-" : "";
    out += whole.get_str();
    if (frac != 0) {
        std::string f = frac.get_str();
        f.insert(f.begin(), 6 - f.size(), '0');
        while (f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

std::string trimmed_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

Rect OrientedRect::bounds() const {
    Rational x0 = corners[0].first, x1 = corners[0].first;
    Rational y0 = corners[0].second, y1 = corners[0].second;
    for (const auto& [x, y] : corners) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    return Rect{x0, x1, y0, y1};
}

std::vector<OrientedRect> level_rects(const BoxLikeIFS& ifs, int k, int depth_guard) {
    if (k < 1) throw std::invalid_argument("level_rects: level must be at least 1");
    if (k > depth_guard)
        throw std::invalid_argument("level_rects: level " + std::to_string(k) +
                                    " exceeds the depth guard of " + std::to_string(depth_guard));
    if (auto err = validate_ifs(ifs)) throw std::invalid_argument(*err);

    std::vector<OrientedRect> out;
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= ifs.size();
    out.reserve(total);

    std::vector<std::size_t> word;
    collect(ifs, ExactAffine::identity(), word, 0, k, out);
    return out;
}

std::string render_svg(const std::vector<OrientedRect>& rects, const SvgStyle& style) {
    if (style.viewport <= 0) throw std::invalid_argument("render_svg: viewport must be positive");
    const int vp = style.viewport;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << vp << "\" height=\"" << vp
        << "\" viewBox=\"0 0 " << vp << " " << vp << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << vp << "\" height=\"" << vp
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    for (const OrientedRect& r : rects) {
        const Rect b = r.bounds();
        // flip y: the SVG origin is top-left
        const Rational y_top = Rational(1) - b.y1;
        svg << "  <rect x=\"" << pixel_coord(b.x0, vp) << "\" y=\"" << pixel_coord(y_top, vp)
            << "\" width=\"" << pixel_coord(b.width(), vp) << "\" height=\""
            << pixel_coord(b.height(), vp) << "\" fill=\"" << style.fill << "\"";
        if (style.opacity != 1.0) svg << " fill-opacity=\"" << trimmed_double(style.opacity) << "\"";
        svg << "/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_svg(const std::vector<OrientedRect>& rects, const std::string& path,
              const SvgStyle& style) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_svg: cannot open " + path + " for writing");
    out << render_svg(rects, style);
    if (!out) throw std::runtime_error("emit_svg: write failed for " + path);
}

}  // namespace boxlike
