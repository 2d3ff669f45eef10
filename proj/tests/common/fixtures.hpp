#pragma once

#include "boxlike/config.hpp"
#include "boxlike/ifs.hpp"

#include <stdexcept>
#include <string>

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(BOXLIKE_FIXTURE_DIR) + "/" + name;
}

inline boxlike::Rational rat(const std::string& text) {
    auto r = boxlike::Rational::parse(text);
    if (!r) throw std::runtime_error("fixture rational does not parse: " + text);
    return *r;
}

inline boxlike::Rect rect(const std::string& x0, const std::string& x1, const std::string& y0,
                          const std::string& y1) {
    return boxlike::Rect{rat(x0), rat(x1), rat(y0), rat(y1)};
}

// Non-separated three-map system: reflection left, rotations right.
inline boxlike::BoxLikeIFS nonseparated_carpet() {
    using namespace boxlike;
    BoxLikeIFS ifs;
    ifs.maps.push_back(from_target_rect(Dihedral::ReflectV, rect("0", "2/5", "1/4", "3/4")));
    ifs.maps.push_back(from_target_rect(Dihedral::Rot270, rect("3/5", "1", "3/4", "1")));
    ifs.maps.push_back(from_target_rect(Dihedral::Rot90, rect("3/5", "1", "0", "1/4")));
    return ifs;
}

inline boxlike::BoxLikeIFS nonseparated_carpet_axis() {
    using namespace boxlike;
    BoxLikeIFS ifs;
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("0", "2/5", "1/4", "3/4")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("3/5", "1", "3/4", "1")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("3/5", "1", "0", "1/4")));
    return ifs;
}

// Block-type three-map system.
inline boxlike::BoxLikeIFS blocktype_carpet() {
    using namespace boxlike;
    BoxLikeIFS ifs;
    ifs.maps.push_back(from_target_rect(Dihedral::ReflectH, rect("0", "1/2", "7/10", "1")));
    ifs.maps.push_back(from_target_rect(Dihedral::Rot90, rect("1/4", "3/4", "1/2", "7/10")));
    ifs.maps.push_back(from_target_rect(Dihedral::ReflectV, rect("3/4", "1", "0", "3/5")));
    return ifs;
}

inline boxlike::BoxLikeIFS blocktype_carpet_axis() {
    using namespace boxlike;
    BoxLikeIFS ifs;
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("0", "1/2", "7/10", "1")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("1/4", "3/4", "1/2", "7/10")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("3/4", "1", "0", "3/5")));
    return ifs;
}

inline boxlike::BoxLikeIFS grid2x2() {
    using namespace boxlike;
    BoxLikeIFS ifs;
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("0", "1/2", "0", "1/2")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("1/2", "1", "0", "1/2")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("0", "1/2", "1/2", "1")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("1/2", "1", "1/2", "1")));
    return ifs;
}

inline boxlike::BoxLikeIFS corner3() {
    using namespace boxlike;
    BoxLikeIFS ifs;
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("0", "1/4", "0", "1/4")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("0", "1/4", "3/4", "1")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("3/4", "1", "0", "1/4")));
    return ifs;
}

inline boxlike::BoxLikeIFS overlapping_pair() {
    using namespace boxlike;
    BoxLikeIFS ifs;
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("0", "1/2", "0", "1/2")));
    ifs.maps.push_back(from_target_rect(Dihedral::Id, rect("0", "1/2", "0", "1/2")));
    return ifs;
}

}  // namespace testutil
