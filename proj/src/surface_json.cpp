#include "cluskein/surface_json.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cluskein {

using nlohmann::json;

namespace {

void require_fields(const json& obj, const std::set<std::string>& allowed,
                    const std::set<std::string>& required,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (allowed.count(key) == 0)
            throw InvalidSurface("unknown field '" + key + "' in " + where);
    for (const auto& key : required)
        if (!obj.contains(key))
            throw InvalidSurface("missing field '" + key + "' in " + where);
}

int nonneg_int(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InvalidSurface("field '" + field +
                             "' must be a nonnegative integer");
    return j.get<int>();
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
    if (!j.is_array())
        throw InvalidSurface("field '" + field + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string())
            throw InvalidSurface("field '" + field +
                                 "' must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

SurfaceDocument load_surface_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!doc.is_object())
        throw InvalidSurface("surface document must be a JSON object");
    require_fields(doc,
                   {"genus", "boundary", "punctures", "edges", "triangles",
                    "tags", "isotopy_pairs", "loops"},
                   {"genus", "boundary", "punctures", "edges", "triangles"},
                   "surface document");

    SurfaceDocument out;
    out.surface.genus = nonneg_int(doc["genus"], "genus");
    out.surface.punctures = nonneg_int(doc["punctures"], "punctures");
    if (!doc["boundary"].is_array())
        throw InvalidSurface("field 'boundary' must be an array");
    for (const auto& m : doc["boundary"])
        out.surface.boundary.push_back(nonneg_int(m, "boundary"));
    out.surface.require_triangulable();

    for (int i = 1; i <= out.surface.punctures; ++i)
        out.punctures.insert("v" + std::to_string(i));

    require_fields(doc["edges"], {"interior", "boundary"},
                   {"interior", "boundary"}, "'edges'");
    auto boundary_edges = string_list(doc["edges"]["boundary"], "edges.boundary");
    auto interior_edges = string_list(doc["edges"]["interior"], "edges.interior");
    for (const auto& name : boundary_edges) {
        out.triangulation.edge_names.push_back(name);
        out.triangulation.boundary_edge.push_back(true);
    }
    for (const auto& name : interior_edges) {
        out.triangulation.edge_names.push_back(name);
        out.triangulation.boundary_edge.push_back(false);
    }
    std::set<std::string> seen;
    for (const auto& name : out.triangulation.edge_names)
        if (!seen.insert(name).second)
            throw InvalidSurface("duplicate edge identifier '" + name + "'");

    if (!doc["triangles"].is_array())
        throw InvalidSurface("field 'triangles' must be an array");
    for (const auto& tri : doc["triangles"]) {
        auto names = string_list(tri, "triangles");
        if (names.size() != 3)
            throw InvalidSurface("each triangle must list exactly 3 edges");
        std::array<int, 3> indices;
        for (int s = 0; s < 3; ++s) {
            if (seen.count(names[s]) == 0)
                throw InvalidSurface("triangle references unknown edge '" +
                                     names[s] + "'");
            indices[s] = out.triangulation.index_of(names[s]);
        }
        out.triangulation.triangles.push_back(indices);
    }

    if (doc.contains("tags")) {
        if (!doc["tags"].is_array())
            throw InvalidSurface("field 'tags' must be an array");
        for (const auto& entry : doc["tags"]) {
            require_fields(entry, {"arc", "ends", "puncture_ends"},
                           {"arc", "ends"}, "'tags' entry");
            TaggedArc arc;
            if (!entry["arc"].is_string() ||
                seen.count(entry["arc"].get<std::string>()) == 0)
                throw InvalidSurface("tags entry names an unknown arc");
            arc.edge = entry["arc"].get<std::string>();
            auto ends = string_list(entry["ends"], "tags.ends");
            if (ends.size() != 2)
                throw InvalidSurface("tags entry 'ends' must have 2 entries");
            for (int s = 0; s < 2; ++s) {
                if (ends[s] == "plain")
                    arc.ends[s].tag = Tag::plain;
                else if (ends[s] == "notched")
                    arc.ends[s].tag = Tag::notched;
                else
                    throw InvalidSurface("tag must be 'plain' or 'notched'");
            }
            if (entry.contains("puncture_ends")) {
                const auto& pe = entry["puncture_ends"];
                if (!pe.is_array() || pe.size() != 2)
                    throw InvalidSurface(
                        "'puncture_ends' must be an array of 2 entries");
                for (int s = 0; s < 2; ++s) {
                    if (pe[s].is_null()) continue;
                    if (!pe[s].is_string() ||
                        out.punctures.count(pe[s].get<std::string>()) == 0)
                        throw InvalidSurface(
                            "'puncture_ends' names an unknown puncture");
                    arc.ends[s].point = pe[s].get<std::string>();
                }
            }
            for (const auto& end : arc.ends)
                if (end.tag == Tag::notched && end.point.empty())
                    throw InvalidSurface(
                        "notched end of '" + arc.edge +
                        "' does not name an interior puncture");
            if (!arc.ends[0].point.empty() || !arc.ends[1].point.empty())
                out.endpoints[arc.edge] = {arc.ends[0].point,
                                           arc.ends[1].point};
            if (!arc.all_plain()) out.decorated_arcs.push_back(arc);
        }
    }

    if (doc.contains("isotopy_pairs")) {
        if (!doc["isotopy_pairs"].is_array())
            throw InvalidSurface("field 'isotopy_pairs' must be an array");
        for (const auto& pair : doc["isotopy_pairs"]) {
            auto names = string_list(pair, "isotopy_pairs");
            if (names.size() != 2 || seen.count(names[0]) == 0 ||
                seen.count(names[1]) == 0)
                throw InvalidSurface(
                    "isotopy pair must name two known edges");
            out.isotopy.declare(names[0], names[1]);
        }
    }

    if (doc.contains("loops")) {
        if (!doc["loops"].is_array())
            throw InvalidSurface("field 'loops' must be an array");
        for (const auto& entry : doc["loops"]) {
            require_fields(entry, {"name", "laurent"}, {"name", "laurent"},
                           "'loops' entry");
            if (!entry["name"].is_string() || !entry["laurent"].is_string())
                throw InvalidSurface("loop entries carry string fields");
            out.loops.push_back(LoopDecl{entry["name"].get<std::string>(),
                                         entry["laurent"].get<std::string>()});
        }
    }
    return out;
}

SurfaceDocument load_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return load_surface_json(text.str());
}

TaggedTriangulation SurfaceDocument::tagged() const {
    return make_tagged(surface, triangulation, endpoints, punctures,
                       decorated_arcs, isotopy);
}

SurfaceDocument builtin_document(const std::string& name) {
    auto from_builtin = [](const BuiltinSurface& b) {
        SurfaceDocument doc;
        doc.surface = b.surface;
        doc.triangulation = b.triangulation;
        doc.endpoints = b.endpoints;
        doc.punctures = b.punctures;
        return doc;
    };
    if (name == "punctured-torus")
        return from_builtin(builtin_punctured_torus());
    if (name.rfind("disk:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(name.substr(5));
        } catch (...) {
            throw Error("malformed builtin '" + name + "'");
        }
        return from_builtin(builtin_disk(n));
    }
    throw Error("unknown builtin '" + name +
                "' (expected disk:<n> or punctured-torus)");
}

}  // namespace cluskein
