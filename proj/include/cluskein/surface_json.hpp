/*
 * surface_json.hpp
 * ----------------
 * The JSON surface document.  Field names and semantics are normative;
 * unknown fields are rejected.
 *
 *   {"genus": g, "boundary": [m1,...], "punctures": p,
 *    "edges": {"interior": [...], "boundary": [...]},
 *    "triangles": [[e,e,e],...],
 *    "tags": [{"arc": e, "ends": ["plain","notched"],
 *              "puncture_ends": [null, "v1"]}, ...],
 *    "isotopy_pairs": [[e,e],...],
 *    "loops": [{"name": ..., "laurent": "display-form string"}, ...]}
 *
 * Punctures are named v1..vp.  Edge indices run boundary-first in list
 * order, then interior; that order is the variable order everywhere.
 */
#ifndef CLUSKEIN_SURFACE_JSON_HPP
#define CLUSKEIN_SURFACE_JSON_HPP

#include <set>
#include <string>
#include <vector>

#include "cluskein/surface.hpp"

namespace cluskein {

struct LoopDecl {
    std::string name;
    std::string laurent;  // display-form expression over the edge variables
};

struct SurfaceDocument {
    MarkedSurface surface;
    Triangulation triangulation;
    ArcEndpoints endpoints;
    std::set<std::string> punctures;
    std::vector<TaggedArc> decorated_arcs;  // arcs carrying a notched end
    IsotopyDecls isotopy;
    std::vector<LoopDecl> loops;

    TaggedTriangulation tagged() const;
};

// Throws ParseError with a byte position for malformed JSON and
// InvalidSurface for schema or semantic violations (including
// non-triangulable surfaces, which are rejected at load time).
SurfaceDocument load_surface_json(const std::string& text);

SurfaceDocument load_surface_file(const std::string& path);

// "disk:n" (n >= 4) or "punctured-torus".
SurfaceDocument builtin_document(const std::string& name);

}  // namespace cluskein

#endif
