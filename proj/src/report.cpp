#include "boxlike/report.hpp"

#include "boxlike/version.hpp"

#include <cstdio>
#include <cstdlib>

namespace boxlike {

double round_sig(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::strtod(buf, nullptr);
}

namespace {

using nlohmann::json;

json rect_json(const Rect& r) {
    return json::array({r.x0.str(), r.x1.str(), r.y0.str(), r.y1.str()});
}

json maps_json(const BoxLikeIFS& ifs) {
    json maps = json::array();
    for (const AffineMap& m : ifs.maps) {
        maps.push_back({
            {"a", m.a.str()},
            {"b", m.b.str()},
            {"iso", std::string(dihedral_name(m.iso))},
            {"t", json::array({m.tx.str(), m.ty.str()})},
            {"rect", rect_json(image_rect(m))},
            {"class", std::string(1, map_class_char(classify_map(m)))},
        });
    }
    return maps;
}

json estimate_json(const DimensionEstimate& est) {
    json roots = json::array();
    for (double r : est.roots) roots.push_back(round_sig(r));
    json schedule = json::array();
    for (int k : est.schedule) schedule.push_back(k);
    return {
        {"schedule", schedule},
        {"roots", roots},
        {"final_upper", round_sig(est.final_upper)},
        {"extrapolated", round_sig(est.extrapolated)},
        {"method_flags", est.flags},
    };
}

}  // namespace

json report_to_json(const RunReport& report) {
    json doc;
    doc["tool"] = {{"name", std::string(kToolName)}, {"version", std::string(kToolVersion)}};
    doc["ifs"] = {{"maps", maps_json(report.ifs)}};
    json per_map = json::array();
    for (const AffineMap& m : report.ifs.maps)
        per_map.push_back(std::string(1, map_class_char(classify_map(m))));
    doc["classification"] = {
        {"system", report.system_type == SystemType::Separated ? "separated" : "non_separated"},
        {"per_map", per_map},
        {"block_type", report.block_type},
    };

    std::vector<std::string> warnings = report.warnings;

    if (report.rosc) {
        json rosc;
        if (report.rosc_rect) rosc["rect"] = rect_json(*report.rosc_rect);
        rosc["status"] = report.rosc->satisfied ? "satisfied" : "violated";
        if (report.rosc->witness) {
            const RoscWitness& w = *report.rosc->witness;
            json witness;
            witness["kind"] =
                w.kind == RoscWitness::Kind::Containment ? "containment" : "overlap";
            if (w.kind == RoscWitness::Kind::Containment) {
                witness["maps"] = json::array({w.map_i});
            } else {
                witness["maps"] = json::array({w.map_i, w.map_j});
            }
            witness["detail"] = w.describe();
            rosc["witness"] = witness;
            warnings.push_back("ROSC violated (" + w.describe() +
                               "); dimension values are upper bounds only");
        }
        doc["rosc"] = rosc;
    }

    if (report.projections) {
        const ProjectionDims& p = *report.projections;
        doc["projections"] = {
            {"s1", round_sig(p.s1)},
            {"s2", round_sig(p.s2)},
            {"method",
             {{"s1", std::string(proj_method_name(p.method_s1))},
              {"s2", std::string(proj_method_name(p.method_s2))}}},
            {"rigorous", p.rigorous},
            {"dedupe_log", p.dedupe_log},
        };
        for (const std::string& w : p.warnings) warnings.push_back("projections: " + w);
    }

    if (report.dimension) doc["dimension"] = estimate_json(*report.dimension);
    if (report.affinity) doc["affinity"] = estimate_json(*report.affinity);

    if (report.gap) {
        const GapReport& g = *report.gap;
        json gap = {
            {"k", g.k},
            {"d_hat", round_sig(g.d_hat)},
            {"s_max", round_sig(g.s_max)},
            {"epsilon", round_sig(g.epsilon)},
            {"certificate_valid", g.certificate_valid},
            {"gap_detected", g.gap_detected},
        };
        if (g.epsilon > 0.0) {
            gap["eta_hat"] = round_sig(g.eta_hat);
            gap["bound"] = round_sig(g.bound);
        }
        doc["gap"] = gap;
    }

    doc["warnings"] = warnings;
    return doc;
}

}  // namespace boxlike
