#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fatpierce/fatset.hpp"

namespace fatpierce {

using nlohmann::json;

namespace {

Point parse_point(const json& j, int index) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FamilyFormatError("expected [x, y] coordinate pair", index);
    return {j[0].get<double>(), j[1].get<double>()};
}

Shape parse_shape(const json& j, int index) {
    if (!j.is_object() || !j.contains("kind"))
        throw FamilyFormatError("shape must be an object with a kind", index);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "disk") {
        Disk d;
        d.center = parse_point(j.at("center"), index);
        d.radius = j.at("radius").get<double>();
        if (d.radius < 0.0) throw FamilyFormatError("negative disk radius", index);
        return d;
    }
    if (kind == "polygon") {
        std::vector<Point> vs;
        for (const auto& v : j.at("vertices")) vs.push_back(parse_point(v, index));
        const bool convex = j.value("convex", false);
        if (convex) {
            if (!is_strictly_convex_ccw(vs))
                throw FamilyFormatError("polygon marked convex is not strictly convex ccw", index);
            return ConvexPolygon{std::move(vs)};
        }
        if (!is_simple_ccw(vs))
            throw FamilyFormatError("polygon is not simple ccw", index);
        return SimplePolygon{std::move(vs)};
    }
    throw FamilyFormatError("unknown shape kind: " + kind, index);
}

json point_to_json(Point p) { return json::array({p.x, p.y}); }

json shape_to_json(const Shape& s) {
    json j;
    if (const auto* d = std::get_if<Disk>(&s)) {
        j["kind"] = "disk";
        j["center"] = point_to_json(d->center);
        j["radius"] = d->radius;
        return j;
    }
    j["kind"] = "polygon";
    json vs = json::array();
    if (const auto* c = std::get_if<ConvexPolygon>(&s)) {
        j["convex"] = true;
        for (const Point& v : c->vertices) vs.push_back(point_to_json(v));
    } else {
        j["convex"] = false;
        for (const Point& v : std::get<SimplePolygon>(s).vertices) vs.push_back(point_to_json(v));
    }
    j["vertices"] = std::move(vs);
    return j;
}

}  // namespace

Family load_family(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw FamilyFormatError(std::string("invalid JSON: ") + e.what());
    }
    try {
        Family f;
        f.r = j.at("r").get<double>();
        if (!(f.r > 0.0 && f.r <= 1.0)) throw FamilyFormatError("r must be in (0, 1]");
        const std::string mode = j.at("mode").get<std::string>();
        if (mode == "22")
            f.mode = Mode::Property22;
        else if (mode == "43")
            f.mode = Mode::Property43;
        else
            throw FamilyFormatError("mode must be \"22\" or \"43\"");
        const auto& sets = j.at("sets");
        if (!sets.is_array() || sets.empty()) throw FamilyFormatError("sets must be non-empty");
        int index = 0;
        for (const auto& js : sets) {
            FatSet fs;
            fs.shape = parse_shape(js.at("shape"), index);
            const auto& w = js.at("witness");
            fs.witness_center = parse_point(w.at("center"), index);
            fs.core_radius = w.at("core_radius").get<double>();
            if (fs.core_radius < f.r - kFatnessTol)
                throw FamilyFormatError("core_radius below family r", index);
            if (f.mode == Mode::Property43 && !shape_is_convex(fs.shape))
                throw FamilyFormatError("convexity required", index);
            if (!verify_fatness(fs.shape, fs.witness_center, fs.core_radius))
                throw FamilyFormatError("fatness witness failed verification", index);
            f.sets.push_back(std::move(fs));
            ++index;
        }
        return f;
    } catch (const json::exception& e) {
        throw FamilyFormatError(std::string("schema violation: ") + e.what());
    }
}

std::string save_family(const Family& f) {
    json j;
    j["version"] = 1;
    j["r"] = f.r;
    j["mode"] = f.mode == Mode::Property22 ? "22" : "43";
    json sets = json::array();
    for (const FatSet& fs : f.sets) {
        json js;
        js["shape"] = shape_to_json(fs.shape);
        js["witness"] = {{"center", point_to_json(fs.witness_center)},
                         {"core_radius", fs.core_radius}};
        sets.push_back(std::move(js));
    }
    j["sets"] = std::move(sets);
    return j.dump(2) + "\n";
}

Family load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FamilyFormatError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_family(ss.str());
}

void save_family_file(const Family& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FamilyFormatError("cannot write file: " + path);
    out << save_family(f);
}

}  // namespace fatpierce
