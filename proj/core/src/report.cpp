#include <json.hpp>

#include "pcx/bnb.hpp"

namespace pcx {

namespace {

using nlohmann::json;

json box_to_json(const BoxRegion& box) {
    return json{{"lo", box.lo}, {"hi", box.hi}};
}

BoxRegion box_from_json(const json& j) {
    BoxRegion box;
    box.lo = j.at("lo").get<std::vector<double>>();
    box.hi = j.at("hi").get<std::vector<double>>();
    if (!box.valid()) throw std::runtime_error("invalid box in report");
    return box;
}

json points_to_json(const std::vector<SolutionPoint>& pts) {
    json arr = json::array();
    for (const SolutionPoint& p : pts) arr.push_back(json{{"x", p.x}, {"f", p.f}});
    return arr;
}

std::vector<SolutionPoint> points_from_json(const json& arr) {
    std::vector<SolutionPoint> pts;
    for (const json& j : arr)
        pts.push_back({j.at("x").get<std::vector<double>>(), j.at("f").get<double>()});
    return pts;
}

json boxes_to_json(const std::vector<NodeRecord>& list) {
    json arr = json::array();
    for (const NodeRecord& rec : list) arr.push_back(box_to_json(rec.box));
    return arr;
}

std::vector<NodeRecord> boxes_from_json(const json& arr) {
    std::vector<NodeRecord> list;
    for (const json& j : arr) {
        NodeRecord rec;
        rec.box = box_from_json(j);
        list.push_back(std::move(rec));
    }
    return list;
}

}  // namespace

std::string report_to_json(const RunReport& report, const BoxRegion& domain,
                           const std::string& function_text) {
    json j;
    j["function"] = function_text;
    j["domain"] = box_to_json(domain);
    j["iterations"] = report.iterations;
    j["flag_ter"] = report.flag_ter;
    j["f_min"] = report.f_min;
    j["n_eps"] = report.clusters.size();
    j["boxes"] = json{{"active", report.boxes_active},
                      {"convex", report.boxes_convex},
                      {"discarded", report.boxes_discarded}};
    j["solutions"] = points_to_json(report.solutions);
    j["clusters"] = points_to_json(report.clusters);
    if (report.has_boxes) {
        j["box_lists"] = json{{"active", boxes_to_json(report.list_active)},
                              {"convex", boxes_to_json(report.list_convex)},
                              {"discarded", boxes_to_json(report.list_discarded)}};
    }
    j["wall_ms"] = report.wall_ms;
    return j.dump(2) + "\n";
}

ParsedReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    ParsedReport parsed;
    parsed.function_text = j.at("function").get<std::string>();
    parsed.domain = box_from_json(j.at("domain"));
    RunReport& r = parsed.report;
    r.iterations = j.at("iterations").get<long>();
    r.flag_ter = j.at("flag_ter").get<int>();
    r.f_min = j.at("f_min").get<double>();
    r.boxes_active = j.at("boxes").at("active").get<std::size_t>();
    r.boxes_convex = j.at("boxes").at("convex").get<std::size_t>();
    r.boxes_discarded = j.at("boxes").at("discarded").get<std::size_t>();
    r.solutions = points_from_json(j.at("solutions"));
    r.clusters = points_from_json(j.at("clusters"));
    if (j.contains("box_lists")) {
        r.has_boxes = true;
        r.list_active = boxes_from_json(j.at("box_lists").at("active"));
        r.list_convex = boxes_from_json(j.at("box_lists").at("convex"));
        r.list_discarded = boxes_from_json(j.at("box_lists").at("discarded"));
    }
    r.wall_ms = j.value("wall_ms", 0.0);
    return parsed;
}

}  // namespace pcx
