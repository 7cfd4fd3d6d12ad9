#include "cluskein/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cluskein {

// ------------------------------------------------------------ MarkedSurface

int MarkedSurface::boundary_marked_points() const {
    return std::accumulate(boundary.begin(), boundary.end(), 0);
}

int MarkedSurface::total_marked_points() const {
    return boundary_marked_points() + punctures;
}

int MarkedSurface::interior_arc_count() const {
    return 6 * genus + 3 * boundary_components() + 3 * punctures +
           boundary_marked_points() - 6;
}

int MarkedSurface::triangle_count() const {
    return 4 * genus + 2 * boundary_components() + 2 * punctures +
           boundary_marked_points() - 4;
}

bool MarkedSurface::is_triangulable(std::string* reason) const {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (genus < 0 || punctures < 0) return fail("negative genus or puncture count");
    for (int m : boundary)
        if (m <= 0)
            return fail("boundary component with no marked point");
    if (total_marked_points() == 0) return fail("no marked point at all");
    if (boundary.empty() && genus == 0 && punctures < 4)
        return fail("sphere with fewer than 4 punctures");
    if (genus == 0 && boundary.size() == 1) {
        int m = boundary[0];
        if (punctures == 0 && m < 3)
            return fail("disk with fewer than 3 boundary marked points and no puncture");
        if (punctures == 1 && m == 1)
            return fail("once-punctured monogon");
    }
    return true;
}

void MarkedSurface::require_triangulable() const {
    std::string why;
    if (!is_triangulable(&why))
        throw InvalidSurface("surface admits no ideal triangulation: " + why);
}

// ------------------------------------------------------------ Triangulation

int Triangulation::boundary_edge_count() const {
    return static_cast<int>(
        std::count(boundary_edge.begin(), boundary_edge.end(), true));
}

int Triangulation::interior_edge_count() const {
    return edge_count() - boundary_edge_count();
}

std::vector<int> Triangulation::interior_edges() const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
        if (!boundary_edge[e]) out.push_back(e);
    return out;
}

int Triangulation::index_of(const std::string& name) const {
    for (int e = 0; e < edge_count(); ++e)
        if (edge_names[e] == name) return e;
    throw UnknownVariable("unknown edge '" + name + "'");
}

bool Triangulation::triangle_self_folded(int t) const {
    const auto& tri = triangles.at(t);
    return tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2];
}

bool Triangulation::is_self_folded_inner(int e) const {
    for (const auto& tri : triangles) {
        int count = 0;
        for (int s : tri)
            if (s == e) ++count;
        if (count >= 2) return true;
    }
    return false;
}

std::optional<int> Triangulation::enclosing_loop(int e) const {
    for (const auto& tri : triangles) {
        int count = 0;
        for (int s : tri)
            if (s == e) ++count;
        if (count == 2) {
            for (int s : tri)
                if (s != e) return s;
        }
    }
    return std::nullopt;
}

Triangulation Triangulation::canonical() const {
    Triangulation c = *this;
    for (auto& tri : c.triangles) {
        std::array<int, 3> best = tri;
        for (int r = 1; r < 3; ++r) {
            std::array<int, 3> rot = {tri[r % 3], tri[(r + 1) % 3],
                                      tri[(r + 2) % 3]};
            if (rot < best) best = rot;
        }
        tri = best;
    }
    std::sort(c.triangles.begin(), c.triangles.end());
    return c;
}

bool Triangulation::same_as(const Triangulation& other) const {
    Triangulation a = canonical();
    Triangulation b = other.canonical();
    return a.edge_names == b.edge_names && a.boundary_edge == b.boundary_edge &&
           a.triangles == b.triangles;
}

// ----------------------------------------------------------------- validate

ValidationReport validate(const MarkedSurface& surface, const Triangulation& t) {
    ValidationReport report;
    auto violation = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };

    std::string why;
    if (!surface.is_triangulable(&why)) violation("surface: " + why);

    std::set<std::string> seen;
    for (const auto& name : t.edge_names)
        if (!seen.insert(name).second)
            violation("duplicate edge identifier '" + name + "'");

    bool indices_ok = true;
    for (size_t i = 0; i < t.triangles.size(); ++i) {
        for (int e : t.triangles[i]) {
            if (e < 0 || e >= t.edge_count()) {
                violation("triangle " + std::to_string(i) +
                          " references an unknown edge index");
                indices_ok = false;
            }
        }
    }
    if (!indices_ok) return report;

    // Manifold condition: boundary edges lie on exactly one triangle-side,
    // interior edges on exactly two (counted with multiplicity).
    std::vector<int> sides(t.edge_count(), 0);
    for (const auto& tri : t.triangles)
        for (int e : tri) ++sides[e];
    for (int e = 0; e < t.edge_count(); ++e) {
        int want = t.boundary_edge[e] ? 1 : 2;
        if (sides[e] != want)
            violation("edge '" + t.edge_names[e] + "' occurs in " +
                      std::to_string(sides[e]) + " triangle-sides, expected " +
                      std::to_string(want));
    }

    int V = surface.total_marked_points();
    int E = t.edge_count();
    int F = static_cast<int>(t.triangles.size());
    int chi = 2 - 2 * surface.genus - surface.boundary_components();
    if (V - E + F != chi)
        violation("Euler characteristic mismatch: V-E+F = " +
                  std::to_string(V - E + F) + ", expected " +
                  std::to_string(chi));

    if (t.boundary_edge_count() != surface.boundary_marked_points())
        violation("boundary partition mismatch: " +
                  std::to_string(t.boundary_edge_count()) +
                  " boundary edges for " +
                  std::to_string(surface.boundary_marked_points()) +
                  " boundary marked points");

    return report;
}

// ----------------------------------------------------------- ExchangeMatrix

ExchangeMatrix ExchangeMatrix::zero(int n) {
    ExchangeMatrix m;
    m.n = n;
    m.entries.assign(static_cast<size_t>(n) * n, 0);
    m.frozen.assign(n, false);
    return m;
}

bool ExchangeMatrix::skew_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

std::string ExchangeMatrix::to_json() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < n; ++i) {
        if (i) out << ",";
        out << "[";
        for (int j = 0; j < n; ++j) {
            if (j) out << ",";
            out << at(i, j);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

ExchangeMatrix exchange_matrix(const Triangulation& t) {
    const int n = t.edge_count();
    ExchangeMatrix m = ExchangeMatrix::zero(n);
    for (int e = 0; e < n; ++e) m.frozen[e] = t.boundary_edge[e];

    // Inner radii of self-folded triangles are counted in place of their
    // enclosing loops.
    std::vector<std::vector<int>> preimages(n);
    for (int e = 0; e < n; ++e) preimages[e].push_back(e);
    for (int e = 0; e < n; ++e) {
        if (auto loop = t.enclosing_loop(e)) {
            if (*loop == e)
                throw InvalidSurface("degenerate triangle on edge '" +
                                     t.edge_names[e] + "'");
            preimages[*loop].push_back(e);
        }
    }

    for (size_t ti = 0; ti < t.triangles.size(); ++ti) {
        if (t.triangle_self_folded(static_cast<int>(ti))) continue;
        const auto& tri = t.triangles[ti];
        for (int s = 0; s < 3; ++s) {
            int from = tri[s];
            int to = tri[(s + 1) % 3];
            for (int i : preimages[from]) {
                for (int j : preimages[to]) {
                    ++m.at(i, j);
                    --m.at(j, i);
                }
            }
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) < -2 || m.at(i, j) > 2)
                throw InvalidSurface(
                    "exchange matrix entry out of range at (" +
                    t.edge_names[i] + "," + t.edge_names[j] + ")");
    return m;
}

// --------------------------------------------------------------------- flip

Triangulation flip(const Triangulation& t, int k) {
    if (k < 0 || k >= t.edge_count())
        throw UnknownVariable("flip: edge index out of range");
    if (t.boundary_edge[k])
        throw FrozenEdge("cannot flip boundary edge '" + t.edge_names[k] + "'");

    std::vector<std::pair<int, int>> occ;  // (triangle, slot)
    for (size_t ti = 0; ti < t.triangles.size(); ++ti)
        for (int s = 0; s < 3; ++s)
            if (t.triangles[ti][s] == k) occ.emplace_back(ti, s);
    if (occ.size() != 2)
        throw InvalidSurface("edge '" + t.edge_names[k] +
                             "' does not lie on exactly two triangle-sides");
    if (occ[0].first == occ[1].first)
        throw NotFlippable("edge '" + t.edge_names[k] +
                           "' is the inner edge of a self-folded triangle");

    auto rotated = [&](int ti, int slot) {
        const auto& tri = t.triangles[ti];
        return std::array<int, 3>{tri[slot], tri[(slot + 1) % 3],
                                  tri[(slot + 2) % 3]};
    };
    auto t1 = rotated(occ[0].first, occ[0].second);  // (k, a, b)
    auto t2 = rotated(occ[1].first, occ[1].second);  // (k, c, d)

    Triangulation out = t;
    out.triangles[occ[0].first] = {k, t1[2], t2[1]};  // (k', b, c)
    out.triangles[occ[1].first] = {k, t2[2], t1[1]};  // (k', d, a)
    return out;
}

// -------------------------------------------------------------- tagged arcs

namespace {

std::string tag_name(Tag t) { return t == Tag::plain ? "plain" : "notched"; }

}  // namespace

std::string TaggedArc::display() const {
    std::array<std::pair<std::string, std::string>, 2> e = {
        std::make_pair(ends[0].point, tag_name(ends[0].tag)),
        std::make_pair(ends[1].point, tag_name(ends[1].tag))};
    if (e[1] < e[0]) std::swap(e[0], e[1]);
    return edge + "(" + e[0].first + ":" + e[0].second + "," + e[1].first +
           ":" + e[1].second + ")";
}

void IsotopyDecls::declare(const std::string& a, const std::string& b) {
    pairs_.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
}

bool IsotopyDecls::isotopic(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    return pairs_.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) >
           0;
}

bool compatible(const TaggedArc& a, const TaggedArc& b,
                const IsotopyDecls& isotopy) {
    if (isotopy.isotopic(a.edge, b.edge)) {
        // The isotopy aligns ends with matching declared endpoints; the
        // arcs are compatible when some valid alignment leaves at least
        // one end identical.
        auto points_alignable = [](const ArcEnd& x, const ArcEnd& y) {
            return x.point.empty() || y.point.empty() || x.point == y.point;
        };
        for (int swap = 0; swap < 2; ++swap) {
            const ArcEnd& b0 = b.ends[swap ? 1 : 0];
            const ArcEnd& b1 = b.ends[swap ? 0 : 1];
            if (!points_alignable(a.ends[0], b0) ||
                !points_alignable(a.ends[1], b1))
                continue;
            if (a.ends[0].tag == b0.tag || a.ends[1].tag == b1.tag)
                return true;
        }
        return false;
    }
    // Non-isotopic arcs: wherever they share a declared endpoint, the
    // taggings there must be identical.
    for (const ArcEnd& ea : a.ends) {
        if (ea.point.empty()) continue;
        for (const ArcEnd& eb : b.ends) {
            if (eb.point != ea.point) continue;
            if (ea.tag != eb.tag) return false;
        }
    }
    return true;
}

// ------------------------------------------------------ TaggedTriangulation

bool TaggedTriangulation::all_plain() const {
    return std::all_of(arcs.begin(), arcs.end(),
                       [](const TaggedArc& a) { return a.all_plain(); });
}

void TaggedTriangulation::validate() const {
    for (const auto& arc : arcs) {
        for (const auto& end : arc.ends) {
            if (end.tag == Tag::notched &&
                (end.point.empty() || punctures.count(end.point) == 0))
                throw InvalidSurface("notched end of '" + arc.edge +
                                     "' is not at an interior puncture");
        }
    }
    for (size_t i = 0; i < arcs.size(); ++i) {
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            if (arcs[i] == arcs[j])
                throw InvalidSurface("duplicate tagged arc " +
                                     arcs[i].display());
            if (!compatible(arcs[i], arcs[j], isotopy))
                throw InvalidSurface("incompatible tagged arcs " +
                                     arcs[i].display() + " and " +
                                     arcs[j].display());
        }
    }
    int expected = surface.interior_arc_count();
    if (static_cast<int>(arcs.size()) != expected)
        throw InvalidSurface("tagged triangulation has " +
                             std::to_string(arcs.size()) + " arcs, expected " +
                             std::to_string(expected));
}

std::vector<std::string> TaggedTriangulation::sorted_arc_displays() const {
    std::vector<std::string> out;
    out.reserve(arcs.size());
    for (const auto& a : arcs) out.push_back(a.display());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DigonWitness> find_digon_witnesses(
    const Triangulation& t, const ArcEndpoints& endpoints,
    const std::set<std::string>& punctures) {
    std::vector<DigonWitness> out;
    for (const auto& v : punctures) {
        std::vector<std::pair<std::string, std::string>> radii;  // edge, far end
        bool clean = true;
        for (int e = 0; e < t.edge_count(); ++e) {
            if (t.boundary_edge[e]) continue;
            auto it = endpoints.find(t.edge_names[e]);
            if (it == endpoints.end()) continue;
            const auto& [p, q] = std::make_pair(it->second[0], it->second[1]);
            if (p == v && q == v) {
                clean = false;  // a loop at v is not a digon radius
                break;
            }
            if (p == v) radii.emplace_back(t.edge_names[e], q);
            if (q == v) radii.emplace_back(t.edge_names[e], p);
        }
        if (!clean || radii.size() != 2) continue;
        if (radii[0].first == radii[1].first) continue;
        int r1 = t.index_of(radii[0].first);
        int r2 = t.index_of(radii[1].first);
        std::vector<int> third;
        for (const auto& tri : t.triangles) {
            bool has1 = std::count(tri.begin(), tri.end(), r1) == 1;
            bool has2 = std::count(tri.begin(), tri.end(), r2) == 1;
            if (has1 && has2)
                for (int s : tri)
                    if (s != r1 && s != r2) third.push_back(s);
        }
        if (third.size() != 2 || third[0] == third[1]) continue;
        out.push_back(DigonWitness{
            v,
            {radii[0].first, radii[1].first},
            {radii[0].second, radii[1].second},
            {t.edge_names[third[0]], t.edge_names[third[1]]}});
    }
    return out;
}

TaggedTriangulation make_tagged(const MarkedSurface& surface,
                                const Triangulation& t,
                                const ArcEndpoints& endpoints,
                                const std::set<std::string>& punctures,
                                std::vector<TaggedArc> decorated_arcs,
                                IsotopyDecls isotopy) {
    TaggedTriangulation tt;
    tt.surface = surface;
    tt.punctures = punctures;
    tt.isotopy = std::move(isotopy);
    tt.endpoints = endpoints;
    tt.plain_triangulation = t;
    for (int e = 0; e < t.edge_count(); ++e) {
        const std::string& name = t.edge_names[e];
        if (t.boundary_edge[e]) {
            tt.boundary_edges.push_back(name);
            continue;
        }
        auto decorated = std::find_if(
            decorated_arcs.begin(), decorated_arcs.end(),
            [&](const TaggedArc& a) { return a.edge == name; });
        if (decorated != decorated_arcs.end()) {
            tt.arcs.push_back(*decorated);
            continue;
        }
        TaggedArc arc;
        arc.edge = name;
        auto it = endpoints.find(name);
        if (it != endpoints.end()) {
            arc.ends[0].point = it->second[0];
            arc.ends[1].point = it->second[1];
        }
        tt.arcs.push_back(std::move(arc));
    }
    tt.digons = find_digon_witnesses(t, endpoints, punctures);
    tt.validate();
    return tt;
}

TaggedTriangulation tagged_flip(const TaggedTriangulation& tt,
                                const TaggedArc& arc) {
    if (std::find(tt.boundary_edges.begin(), tt.boundary_edges.end(),
                  arc.edge) != tt.boundary_edges.end())
        throw FrozenEdge("cannot flip boundary edge '" + arc.edge + "'");
    auto pos = std::find(tt.arcs.begin(), tt.arcs.end(), arc);
    if (pos == tt.arcs.end())
        throw Error("tagged_flip: arc " + arc.display() +
                    " is not in the triangulation");
    size_t arc_index = static_cast<size_t>(pos - tt.arcs.begin());

    // Once-punctured digon case: choose among the four tagged radii.
    for (const auto& digon : tt.digons) {
        if (arc.edge != digon.radii[0] && arc.edge != digon.radii[1]) continue;
        std::vector<TaggedArc> candidates;
        for (int r = 0; r < 2; ++r) {
            for (Tag tag : {Tag::plain, Tag::notched}) {
                TaggedArc c;
                c.edge = digon.radii[r];
                c.ends[0] = ArcEnd{digon.radius_far_ends[r], Tag::plain};
                c.ends[1] = ArcEnd{digon.puncture, tag};
                candidates.push_back(std::move(c));
            }
        }
        std::vector<TaggedArc> chosen;
        for (const auto& c : candidates) {
            if (c == arc) continue;
            bool ok = true;
            for (size_t i = 0; i < tt.arcs.size() && ok; ++i) {
                if (i == arc_index) continue;
                if (c == tt.arcs[i] || !compatible(c, tt.arcs[i], tt.isotopy))
                    ok = false;
            }
            if (ok) chosen.push_back(c);
        }
        if (chosen.size() != 1)
            throw UnsupportedConfiguration(
                "digon flip at '" + arc.edge + "' has " +
                std::to_string(chosen.size()) + " replacement candidates");
        TaggedTriangulation out = tt;
        out.arcs[arc_index] = chosen[0];
        out.validate();
        return out;
    }

    // Ordinary quadrilateral case for all-plain collections.
    if (tt.all_plain() && tt.plain_triangulation) {
        const Triangulation& t = *tt.plain_triangulation;
        int k = t.index_of(arc.edge);
        Triangulation flipped;
        try {
            flipped = flip(t, k);
        } catch (const NotFlippable&) {
            throw UnsupportedConfiguration(
                "flip at '" + arc.edge +
                "' requires a tagged local case with no declared witness");
        }
        int before = 0, after = 0;
        for (size_t ti = 0; ti < t.triangles.size(); ++ti)
            before += t.triangle_self_folded(static_cast<int>(ti));
        for (size_t ti = 0; ti < flipped.triangles.size(); ++ti)
            after += flipped.triangle_self_folded(static_cast<int>(ti));
        if (after > before)
            throw UnsupportedConfiguration(
                "flip at '" + arc.edge +
                "' produces a self-folded triangle; no digon witness declared");

        // The new diagonal joins the corner shared by the first pair of
        // quadrilateral sides to the corner shared by the second pair,
        // when those corners are declared.
        ArcEndpoints old_ends = tt.endpoints;
        old_ends.erase(arc.edge);
        auto corner = [&](int e1, int e2) -> std::string {
            auto i1 = old_ends.find(t.edge_names[e1]);
            auto i2 = old_ends.find(t.edge_names[e2]);
            if (i1 == old_ends.end() || i2 == old_ends.end()) return "";
            std::vector<std::string> common;
            for (const auto& p : i1->second)
                for (const auto& q : i2->second)
                    if (p == q && !p.empty()) common.push_back(p);
            std::sort(common.begin(), common.end());
            common.erase(std::unique(common.begin(), common.end()),
                         common.end());
            return common.size() == 1 ? common[0] : "";
        };
        // Recover the two rotated triangles around k in the original t.
        std::vector<std::pair<int, int>> occ;
        for (size_t ti = 0; ti < t.triangles.size(); ++ti)
            for (int s = 0; s < 3; ++s)
                if (t.triangles[ti][s] == k) occ.emplace_back(ti, s);
        auto side = [&](int which, int off) {
            const auto& tri = t.triangles[occ[which].first];
            return tri[(occ[which].second + off) % 3];
        };
        std::string p = corner(side(0, 1), side(0, 2));
        std::string q = corner(side(1, 1), side(1, 2));
        if (!p.empty() && !q.empty()) old_ends[arc.edge] = {p, q};

        TaggedTriangulation out = make_tagged(tt.surface, flipped, old_ends,
                                              tt.punctures, {}, tt.isotopy);
        return out;
    }

    throw UnsupportedConfiguration(
        "tagged flip at '" + arc.edge +
        "' is outside the recognized local configurations");
}

bool same_tagged(const TaggedTriangulation& a, const TaggedTriangulation& b) {
    if (a.sorted_arc_displays() != b.sorted_arc_displays()) return false;
    std::vector<std::string> ba = a.boundary_edges, bb = b.boundary_edges;
    std::sort(ba.begin(), ba.end());
    std::sort(bb.begin(), bb.end());
    if (ba != bb) return false;
    if (a.all_plain() && b.all_plain() && a.plain_triangulation &&
        b.plain_triangulation)
        return a.plain_triangulation->same_as(*b.plain_triangulation);
    return true;
}

// ------------------------------------------------------------------ builtins

BuiltinSurface builtin_disk(int n) {
    if (n < 4) throw InvalidSurface("disk builtin requires n >= 4");
    BuiltinSurface b;
    b.surface = MarkedSurface{0, {n}, 0};

    Triangulation t;
    auto point = [](int i) { return "m" + std::to_string(i); };
    for (int i = 1; i <= n; ++i) {
        t.edge_names.push_back("x" + std::to_string(i));
        t.boundary_edge.push_back(true);
        b.endpoints["x" + std::to_string(i)] = {point(i),
                                                point(i % n + 1)};
    }
    for (int j = 0; j <= n - 4; ++j) {
        t.edge_names.push_back("x" + std::to_string(n + 1 + j));
        t.boundary_edge.push_back(false);
        b.endpoints["x" + std::to_string(n + 1 + j)] = {point(1), point(3 + j)};
    }
    // Fan from vertex m1: triangle over (m1, mi, mi+1) for i = 2..n-1.
    auto edge_1_to = [&](int i) {
        // edge from m1 to mi: a boundary edge for i = 2 or n, else a diagonal
        if (i == 2) return 0;
        if (i == n) return n - 1;
        return n + (i - 3);
    };
    for (int i = 2; i <= n - 1; ++i)
        t.triangles.push_back(
            {edge_1_to(i), i - 1, edge_1_to(i + 1)});
    b.triangulation = std::move(t);
    return b;
}

BuiltinSurface builtin_punctured_torus() {
    BuiltinSurface b;
    b.surface = MarkedSurface{1, {}, 1};
    Triangulation t;
    t.edge_names = {"x1", "x2", "x3"};
    t.boundary_edge = {false, false, false};
    t.triangles = {{0, 1, 2}, {0, 1, 2}};
    b.triangulation = std::move(t);
    b.punctures = {"v1"};
    b.endpoints = {{"x1", {"v1", "v1"}},
                   {"x2", {"v1", "v1"}},
                   {"x3", {"v1", "v1"}}};
    return b;
}

BuiltinSurface builtin_punctured_digon() {
    BuiltinSurface b;
    b.surface = MarkedSurface{0, {2}, 1};
    Triangulation t;
    t.edge_names = {"x2", "x3", "a", "b"};
    t.boundary_edge = {true, true, false, false};
    // Corners m1 (left), m2 (right); puncture v1 between them.  The top
    // face is (x2, b, a) counterclockwise, the bottom face (a, b, x3).
    t.triangles = {{0, 3, 2}, {2, 3, 1}};
    b.triangulation = std::move(t);
    b.punctures = {"v1"};
    b.endpoints = {{"x2", {"m1", "m2"}},
                   {"x3", {"m1", "m2"}},
                   {"a", {"m1", "v1"}},
                   {"b", {"m2", "v1"}}};
    return b;
}

}  // namespace cluskein
