/*
 * skein.hpp
 * ---------
 * The commutative skein shadow of the cluster structure at q = 1, carried
 * out inside one ambient Laurent ring: edge variables of a fixed
 * triangulation together with one invertible vertex variable per interior
 * puncture.
 *
 * rho sends a tagged arc to its underlying expression times one vertex
 * variable per notched end.  Vertex classes of punctures sitting inside a
 * recognized once-punctured digon expand as (side + side) / (radius *
 * radius); flip compatibility checks the product identity
 * rho(x) * rho(x') = rho(exchange binomial) after that expansion.
 */
#ifndef CLUSKEIN_SKEIN_HPP
#define CLUSKEIN_SKEIN_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cluskein/cluster.hpp"
#include "cluskein/generators.hpp"
#include "cluskein/laurent.hpp"
#include "cluskein/surface.hpp"

namespace cluskein {

struct VertexSymbol {
    std::string puncture;
    int var_index = -1;  // index of the invertible vertex variable
};

// The ambient ring of a fixed triangulation: edge variables in table
// order followed by vertex variables in sorted puncture order, all
// invertible.
struct AmbientRing {
    VarTablePtr table;
    Triangulation triangulation;
    ArcEndpoints endpoints;
    std::set<std::string> punctures;

    VertexSymbol vertex(const std::string& puncture) const;
    LaurentPoly vertex_var(const std::string& puncture) const;
    LaurentPoly edge_var(const std::string& name) const;
};

AmbientRing make_ambient(const Triangulation& t, const ArcEndpoints& endpoints,
                         const std::set<std::string>& punctures);

// Initial seed over the ambient table (vertex variables ride along and
// are never mutated).
Seed ambient_seed(const AmbientRing& ring);

struct RhoImage {
    LaurentPoly value;
};

// A tag is a vertex class: multiplies the underlying expression by the
// vertex variable of each notched end.  Throws InvalidSurface for a
// notched end whose point is not a vertex variable of the table.
RhoImage rho(const TaggedArc& arc, const LaurentPoly& underlying);

// Laurent expression of the vertex class of a puncture sitting in a
// recognized once-punctured digon: (side2 + side3) / (radius1 * radius2),
// all initial variables.  Throws UnsupportedConfiguration otherwise.
LaurentPoly vertex_expansion(const AmbientRing& ring,
                             const std::string& puncture);

// Generalized digon arithmetic along one tracked flip: divides the
// exchange binomial by vars[k] * mutate(s,k).vars[k] and insists the
// division is exact.
LaurentPoly vertex_expansion_via_exchange(const Seed& s, int k);

struct CompatReport {
    bool ok;
    std::string configuration;  // "plain-quadrilateral" or "punctured-digon"
    LaurentPoly lhs;            // rho(x_k) * rho(x_k') after expansion
    LaurentPoly rhs;            // rho(exchange binomial)
};

// Verifies rho(x_k) * rho(x_k') = rho(exchange binomial) for a recognized
// flip.  flip_arc selects the tagged arc occupying slot k when the edge
// name alone is ambiguous.
CompatReport check_flip_compatibility(const AmbientRing& ring, const Seed& s,
                                      int k, const TaggedTriangulation& tags,
                                      const TaggedArc* flip_arc = nullptr);

// The S-square generating set over a fixed triangulation: supplied loops,
// all known arc classes, formal inverses of boundary arcs, and the
// vertex-decorated arcs determined by declared endpoints.  Expressions
// are attached where the engine can compute them.
std::vector<GeneratorDescriptor> square_generators(
    const AmbientRing& ring,
    const std::map<std::string, LaurentPoly>& arc_expressions,
    const std::vector<std::pair<std::string, LaurentPoly>>& loops);

}  // namespace cluskein

#endif
