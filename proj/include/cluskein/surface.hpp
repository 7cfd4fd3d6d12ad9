/*
 * surface.hpp
 * -----------
 * Combinatorial marked surfaces, ideal triangulations, flips, and the
 * signed-adjacency exchange matrix.
 *
 * A triangulation is stored purely combinatorially: an ordered edge list
 * (boundary edges first, then interior edges) and a list of triangles as
 * counterclockwise edge triples.  A triangle with a repeated edge is
 * self-folded; its repeated edge is the inner radius and the remaining
 * edge is the enclosing loop.  No geometric embedding is kept; endpoint
 * and isotopy data, where needed, is declared alongside rather than
 * computed.
 */
#ifndef CLUSKEIN_SURFACE_HPP
#define CLUSKEIN_SURFACE_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cluskein/errors.hpp"

namespace cluskein {

struct MarkedSurface {
    int genus = 0;
    std::vector<int> boundary;  // marked points per boundary component
    int punctures = 0;

    int boundary_components() const { return static_cast<int>(boundary.size()); }
    int boundary_marked_points() const;
    int total_marked_points() const;

    // Number of interior arcs in any ideal triangulation:
    // 6g + 3b + 3p + c - 6.
    int interior_arc_count() const;
    // Number of ideal triangles: 4g + 2b + 2p + c - 4.
    int triangle_count() const;

    bool is_triangulable(std::string* reason = nullptr) const;
    void require_triangulable() const;  // throws InvalidSurface
};

struct Triangulation {
    // Boundary edges first, then interior edges; index order is the
    // variable order everywhere downstream.
    std::vector<std::string> edge_names;
    std::vector<bool> boundary_edge;
    std::vector<std::array<int, 3>> triangles;  // ccw edge-index triples

    int edge_count() const { return static_cast<int>(edge_names.size()); }
    int boundary_edge_count() const;
    int interior_edge_count() const;
    std::vector<int> interior_edges() const;
    int index_of(const std::string& name) const;  // throws UnknownVariable
    bool is_boundary(int e) const { return boundary_edge.at(e); }

    bool triangle_self_folded(int t) const;
    // e occurs twice inside a single triangle (the inner radius).
    bool is_self_folded_inner(int e) const;
    // Loop edge enclosing inner radius e, if e is one.
    std::optional<int> enclosing_loop(int e) const;

    // Triangles rotated to the lexicographically least rotation and
    // sorted; used for structural equality up to relabeling.
    Triangulation canonical() const;
    bool same_as(const Triangulation& other) const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the manifold condition (side counts), the Euler characteristic,
// and the boundary partition against the surface data.
ValidationReport validate(const MarkedSurface& surface, const Triangulation& t);

struct ExchangeMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major
    std::vector<bool> frozen;

    static ExchangeMatrix zero(int n);
    int at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
    int& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
    bool skew_symmetric() const;
    bool operator==(const ExchangeMatrix&) const = default;
    std::string to_json() const;  // e.g. [[0,2,-2],[-2,0,2],[2,-2,0]]
};

// Signed counting of triangle adjacency: +1 per triangle in which edge j
// immediately follows edge i counterclockwise.  Inner radii of
// self-folded triangles are counted in place of their enclosing loops.
// Boundary edges are marked frozen.
ExchangeMatrix exchange_matrix(const Triangulation& t);

// Replaces interior edge k by the opposite diagonal of the quadrilateral
// formed by its two adjacent triangles.  The edge keeps its index and
// identifier.  Throws FrozenEdge for boundary edges and NotFlippable for
// the inner radius of a self-folded triangle.
Triangulation flip(const Triangulation& t, int k);

// ------------------------------------------------------------- tagged arcs

enum class Tag { plain, notched };

struct ArcEnd {
    std::string point;  // marked point id; empty when undeclared
    Tag tag = Tag::plain;
    bool operator==(const ArcEnd&) const = default;
};

struct TaggedArc {
    std::string edge;  // underlying edge id
    std::array<ArcEnd, 2> ends;
    bool operator==(const TaggedArc&) const = default;
    bool all_plain() const {
        return ends[0].tag == Tag::plain && ends[1].tag == Tag::plain;
    }
    std::string display() const;
};

// Declared isotopy data for compatibility checks.  Arcs with the same
// underlying edge id are isotopic; anything else must be declared.
class IsotopyDecls {
  public:
    void declare(const std::string& a, const std::string& b);
    bool isotopic(const std::string& a, const std::string& b) const;

  private:
    std::set<std::pair<std::string, std::string>> pairs_;
};

// Pairwise compatibility of tagged arcs: non-isotopic arcs sharing an
// endpoint must carry identical tags there; isotopic arcs must agree on
// at least one end.  Disjointness away from marked points is declared
// data, not computed here.
bool compatible(const TaggedArc& a, const TaggedArc& b,
                const IsotopyDecls& isotopy);

// Declared endpoints per edge (partial; arcs without declarations are
// simply unknown to endpoint-sensitive operations).
using ArcEndpoints = std::map<std::string, std::array<std::string, 2>>;

// A once-punctured digon recognized around a puncture: two radii meeting
// the puncture once each and the two digon sides.  Recorded so tagged
// flips and vertex expansion can act on it without curve topology.
struct DigonWitness {
    std::string puncture;
    std::array<std::string, 2> radii;
    std::array<std::string, 2> radius_far_ends;  // non-puncture endpoints
    std::array<std::string, 2> sides;
};

// Recognizes once-punctured digons from declared endpoints: a puncture
// met exactly once by each of two distinct interior arcs whose two common
// triangles supply the digon sides.
std::vector<DigonWitness> find_digon_witnesses(
    const Triangulation& t, const ArcEndpoints& endpoints,
    const std::set<std::string>& punctures);

struct TaggedTriangulation {
    MarkedSurface surface;
    std::vector<TaggedArc> arcs;  // non-boundary tagged arcs
    std::vector<std::string> boundary_edges;
    std::set<std::string> punctures;
    IsotopyDecls isotopy;
    ArcEndpoints endpoints;  // declared endpoints, boundary edges included
    std::vector<DigonWitness> digons;
    // The all-plain state's triangulation, when this collection was
    // reached from one; used for ordinary-flip delegation.
    std::optional<Triangulation> plain_triangulation;

    bool all_plain() const;
    // Pairwise compatibility, notched-only-at-punctures, and the
    // maximality cardinality witness.  Throws InvalidSurface.
    void validate() const;
    std::vector<std::string> sorted_arc_displays() const;
};

// Wraps an ideal triangulation as an all-plain (or decorated) tagged
// triangulation, deriving digon witnesses from declared endpoints.
TaggedTriangulation make_tagged(const MarkedSurface& surface,
                                const Triangulation& t,
                                const ArcEndpoints& endpoints,
                                const std::set<std::string>& punctures,
                                std::vector<TaggedArc> decorated_arcs = {},
                                IsotopyDecls isotopy = {});

// Replaces the arc by the unique other compatible tagged arc.  Implemented
// case by case: ordinary quadrilateral flips for all-plain collections and
// the once-punctured digon cases from declared witnesses; anything else
// throws UnsupportedConfiguration.
TaggedTriangulation tagged_flip(const TaggedTriangulation& tt,
                                const TaggedArc& arc);

// Structural equality of tagged triangulations (arc multisets, and the
// underlying triangulation when both sides are plain).
bool same_tagged(const TaggedTriangulation& a, const TaggedTriangulation& b);

// --------------------------------------------------------------- builtins

struct BuiltinSurface {
    MarkedSurface surface;
    Triangulation triangulation;
    ArcEndpoints endpoints;
    std::set<std::string> punctures;
};

// Fan triangulation of the disk with n >= 4 boundary marked points:
// boundary edges x1..xn, diagonals x(n+1)..x(2n-3) from vertex m1.
BuiltinSurface builtin_disk(int n);

// The two-triangle square identification of the once-punctured torus:
// interior edges x1, x2, x3, triangles (x1,x2,x3) twice.
BuiltinSurface builtin_punctured_torus();

// Once-punctured digon: boundary x2 (top), x3 (bottom), radii a and b
// from the two corners to the puncture v1.  Not a CLI builtin; used by
// the skein bridge and its tests.
BuiltinSurface builtin_punctured_digon();

}  // namespace cluskein

#endif
