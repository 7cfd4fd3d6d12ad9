#include "cluskein/skein.hpp"

#include <algorithm>

namespace cluskein {

// --------------------------------------------------------------- AmbientRing

AmbientRing make_ambient(const Triangulation& t, const ArcEndpoints& endpoints,
                         const std::set<std::string>& punctures) {
    AmbientRing ring;
    ring.triangulation = t;
    ring.endpoints = endpoints;
    ring.punctures = punctures;
    std::vector<std::string> names = t.edge_names;
    for (const auto& v : punctures) names.push_back(v);  // set order: sorted
    ring.table = VarTable::ambient(std::move(names));
    return ring;
}

VertexSymbol AmbientRing::vertex(const std::string& puncture) const {
    if (punctures.count(puncture) == 0)
        throw UnknownVariable("'" + puncture + "' is not an interior puncture");
    return VertexSymbol{puncture, table->index_of(puncture)};
}

LaurentPoly AmbientRing::vertex_var(const std::string& puncture) const {
    return LaurentPoly::variable(table, vertex(puncture).var_index);
}

LaurentPoly AmbientRing::edge_var(const std::string& name) const {
    return LaurentPoly::variable(table,
                                 table->index_of(name));
}

Seed ambient_seed(const AmbientRing& ring) {
    std::vector<std::string> extra(ring.punctures.begin(),
                                   ring.punctures.end());
    return initial_seed(ring.triangulation, extra);
}

// ----------------------------------------------------------------------- rho

RhoImage rho(const TaggedArc& arc, const LaurentPoly& underlying) {
    LaurentPoly value = underlying;
    const VarTablePtr& table = underlying.table();
    for (const auto& end : arc.ends) {
        if (end.tag != Tag::notched) continue;
        auto idx = end.point.empty() ? std::nullopt : table->find(end.point);
        if (!idx)
            throw InvalidSurface("notched end of '" + arc.edge + "' at '" +
                                 end.point +
                                 "' is not an interior puncture");
        value *= LaurentPoly::variable(table, *idx);
    }
    return RhoImage{std::move(value)};
}

// ---------------------------------------------------------- vertex expansion

LaurentPoly vertex_expansion(const AmbientRing& ring,
                             const std::string& puncture) {
    auto witnesses = find_digon_witnesses(ring.triangulation, ring.endpoints,
                                          ring.punctures);
    for (const auto& digon : witnesses) {
        if (digon.puncture != puncture) continue;
        LaurentPoly sides =
            ring.edge_var(digon.sides[0]) + ring.edge_var(digon.sides[1]);
        LaurentPoly radii =
            ring.edge_var(digon.radii[0]) * ring.edge_var(digon.radii[1]);
        return exact_divide(sides, radii);
    }
    throw UnsupportedConfiguration(
        "no once-punctured digon witness around '" + puncture + "'");
}

LaurentPoly vertex_expansion_via_exchange(const Seed& s, int k) {
    LaurentPoly binomial = exchange_binomial(s, k);
    LaurentPoly product = s.vars[k] * mutate(s, k).vars[k];
    return exact_divide(binomial, product);
}

// ------------------------------------------------------- flip compatibility

namespace {

LaurentPoly tag_monomial(const AmbientRing& ring, const TaggedArc& arc) {
    LaurentPoly m = LaurentPoly::constant(ring.table, 1);
    for (const auto& end : arc.ends)
        if (end.tag == Tag::notched) m *= ring.vertex_var(end.point);
    return m;
}

}  // namespace

CompatReport check_flip_compatibility(const AmbientRing& ring, const Seed& s,
                                      int k, const TaggedTriangulation& tags,
                                      const TaggedArc* flip_arc) {
    if (k < 0 || k >= ring.triangulation.edge_count())
        throw UnknownVariable("check_flip_compatibility: index out of range");
    const std::string& edge = ring.triangulation.edge_names[k];

    TaggedArc arc;
    if (flip_arc) {
        arc = *flip_arc;
    } else {
        std::vector<TaggedArc> at_edge;
        for (const auto& a : tags.arcs)
            if (a.edge == edge) at_edge.push_back(a);
        if (at_edge.size() != 1)
            throw UnsupportedConfiguration(
                "slot '" + edge +
                "' does not name a unique tagged arc; pass the arc explicitly");
        arc = at_edge[0];
    }

    LaurentPoly binomial = exchange_binomial(s, k);

    const DigonWitness* digon = nullptr;
    for (const auto& d : tags.digons)
        if (arc.edge == d.radii[0] || arc.edge == d.radii[1]) digon = &d;

    if (digon) {
        TaggedTriangulation flipped = tagged_flip(tags, arc);
        const TaggedArc* replacement = nullptr;
        for (const auto& a : flipped.arcs) {
            bool was_there = std::find(tags.arcs.begin(), tags.arcs.end(),
                                       a) != tags.arcs.end();
            if (!was_there) replacement = &a;
        }
        if (!replacement)
            throw UnsupportedConfiguration(
                "digon flip produced no replacement arc");

        // rho of each side: tag monomials times the underlying radii,
        // which are initial edges of the fixed triangulation.
        LaurentPoly lhs = tag_monomial(ring, arc) * ring.edge_var(arc.edge) *
                          tag_monomial(ring, *replacement) *
                          ring.edge_var(replacement->edge);
        LaurentPoly expansion = vertex_expansion(ring, digon->puncture);
        Assignment sigma;
        sigma.emplace(ring.vertex(digon->puncture).var_index,
                      SubstImage(expansion));
        LaurentPoly expanded = substitute(lhs, sigma);
        // The digon sides are untagged, so rho fixes the binomial.
        bool ok = expanded == binomial;
        return CompatReport{ok, "punctured-digon", std::move(expanded),
                            std::move(binomial)};
    }

    if (arc.all_plain() && tags.all_plain()) {
        LaurentPoly lhs = s.vars[k] * mutate(s, k).vars[k];
        bool ok = lhs == binomial;
        return CompatReport{ok, "plain-quadrilateral", std::move(lhs),
                            std::move(binomial)};
    }

    throw UnsupportedConfiguration(
        "flip at '" + edge + "' is outside the recognized configurations");
}

// ---------------------------------------------------------- S-square output

std::vector<GeneratorDescriptor> square_generators(
    const AmbientRing& ring,
    const std::map<std::string, LaurentPoly>& arc_expressions,
    const std::vector<std::pair<std::string, LaurentPoly>>& loops) {
    std::vector<GeneratorDescriptor> out;

    for (const auto& [name, expr] : loops) {
        GeneratorDescriptor d;
        d.kind = GeneratorDescriptor::Kind::loop;
        d.base = name;
        d.expression = expr;
        out.push_back(std::move(d));
    }

    for (const auto& [name, expr] : arc_expressions) {
        GeneratorDescriptor d;
        d.kind = GeneratorDescriptor::Kind::named_arc;
        d.base = name;
        d.expression = expr;
        out.push_back(std::move(d));
    }

    const Triangulation& t = ring.triangulation;
    for (int e = 0; e < t.edge_count(); ++e) {
        if (!t.boundary_edge[e]) continue;
        GeneratorDescriptor d;
        d.kind = GeneratorDescriptor::Kind::boundary_inverse;
        d.base = t.edge_names[e];
        d.expression = pow(ring.edge_var(t.edge_names[e]), -1);
        out.push_back(std::move(d));
    }

    // Vertex-decorated arcs, per declared endpoints.
    for (const auto& [name, expr] : arc_expressions) {
        auto ep = ring.endpoints.find(name);
        if (ep == ring.endpoints.end()) continue;
        const std::string& p = ep->second[0];
        const std::string& q = ep->second[1];
        bool vp = ring.punctures.count(p) > 0;
        bool vq = ring.punctures.count(q) > 0;
        auto emit = [&](const std::vector<std::string>& vertices) {
            GeneratorDescriptor d;
            d.kind = GeneratorDescriptor::Kind::decorated_arc;
            d.base = name;
            d.vertices = vertices;
            LaurentPoly value = expr;
            bool have_all = true;
            for (const auto& v : vertices) {
                try {
                    value *= vertex_expansion(ring, v);
                } catch (const UnsupportedConfiguration&) {
                    have_all = false;
                }
            }
            if (have_all) d.expression = std::move(value);
            out.push_back(std::move(d));
        };
        if (vp && vq) {
            if (p == q) {
                emit({p});
                emit({p, p});
            } else {
                emit({p});
                emit({q});
                emit({p, q});
            }
        } else if (vp || vq) {
            emit({vp ? p : q});
        }
    }
    return out;
}

}  // namespace cluskein
