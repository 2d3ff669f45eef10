#pragma once

#include "boxlike/ifs.hpp"
#include "boxlike/pressure.hpp"
#include "boxlike/projections.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace boxlike {

/// Everything one pipeline run produced. Optional sections stay empty for
/// commands that skip them.
struct RunReport {
    BoxLikeIFS ifs;
    SystemType system_type = SystemType::Separated;
    bool block_type = false;
    std::optional<Rect> rosc_rect;
    std::optional<RoscResult> rosc;
    std::optional<ProjectionDims> projections;
    std::optional<DimensionEstimate> dimension;
    std::optional<DimensionEstimate> affinity;
    std::optional<GapReport> gap;
    std::vector<std::string> warnings;
};

/// Rounds to 12 significant digits; all report decimals pass through this.
double round_sig(double value);

/// Collects warnings from every populated section into report.warnings and
/// returns the JSON document. Every numeric estimate carries its rigor
/// context; warnings are non-empty whenever anything is non-rigorous.
nlohmann::json report_to_json(const RunReport& report);

}  // namespace boxlike
