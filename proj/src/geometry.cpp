#include "boxlike/geometry.hpp"

#include <algorithm>

namespace boxlike {

std::string Rect::str() const {
    return "[" + x0.str() + "," + x1.str() + "]x[" + y0.str() + "," + y1.str() + "]";
}

bool contains(const Rect& outer, const Rect& inner) {
    return inner.x0 >= outer.x0 && inner.x1 <= outer.x1 &&
           inner.y0 >= outer.y0 && inner.y1 <= outer.y1;
}

bool open_overlap(const Rect& a, const Rect& b) {
    return std::max(a.x0, b.x0) < std::min(a.x1, b.x1) &&
           std::max(a.y0, b.y0) < std::min(a.y1, b.y1);
}

bool intervals_cover(std::vector<std::pair<Rational, Rational>> intervals,
                     const Rational& lo, const Rational& hi) {
    if (intervals.empty()) return false;
    std::sort(intervals.begin(), intervals.end());
    if (intervals.front().first > lo) return false;
    Rational reach = intervals.front().second;
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].first > reach) return false;  // gap
        reach = std::max(reach, intervals[i].second);
    }
    return reach >= hi;
}

}  // namespace boxlike
