/*
 * cluster.hpp
 * -----------
 * Cluster seeds and mutation over a triangulated surface, flip-graph
 * exploration with seed deduplication, Laurent-phenomenon verification,
 * and a depth-bounded upper-cluster membership check.
 *
 * Every seed's variables are Laurent polynomials in the initial seed's
 * variable table, so mutation is the exchange relation followed by one
 * exact division; a division that fails to be exact is surfaced, never
 * normalized away.
 */
#ifndef CLUSKEIN_CLUSTER_HPP
#define CLUSKEIN_CLUSTER_HPP

#include <string>
#include <vector>

#include "cluskein/laurent.hpp"
#include "cluskein/surface.hpp"

namespace cluskein {

struct Seed {
    VarTablePtr table;              // the initial seed's ambient table
    std::vector<LaurentPoly> vars;  // one per edge index, in table order
    ExchangeMatrix matrix;

    int size() const { return matrix.n; }
    bool frozen(int k) const { return matrix.frozen.at(k); }
    bool operator==(const Seed& other) const {
        return vars == other.vars && matrix == other.matrix;
    }
};

// Seed of a triangulation: vars[i] is the variable monomial of edge i and
// the matrix is the signed adjacency count.  Boundary variables are
// frozen and invertible.  extra_invertible appends additional ambient
// variables (vertex classes) that mutation never touches.
Seed initial_seed(const Triangulation& t,
                  const std::vector<std::string>& extra_invertible = {});

// b'_ij = -b_ij when i = k or j = k, else b_ij + (|b_ik| b_kj + b_ik |b_kj|)/2.
ExchangeMatrix matrix_mutate(const ExchangeMatrix& B, int k);

// The two exchange monomials of column k evaluated on the seed's
// variables:  prod_{b_jk>0} vars[j]^{b_jk} + prod_{b_jk<0} vars[j]^{-b_jk}.
LaurentPoly exchange_binomial(const Seed& s, int k);

// Same binomial on formal slot variables rather than tracked expressions.
LaurentPoly formal_exchange_binomial(const ExchangeMatrix& B,
                                     const VarTablePtr& table, int k);

// Replaces vars[k] by exchange_binomial / vars[k] and mutates the matrix.
// Throws FrozenEdge for frozen k; propagates InexactDivision (which would
// contradict the Laurent phenomenon on valid input).
Seed mutate(const Seed& s, int k);

// Left fold of mutate; the empty sequence returns s.
Seed mutate_sequence(const Seed& s, const std::vector<int>& ks);

struct LaurentCheckStep {
    int k = -1;
    bool ok = true;
    std::string error;
};

struct LaurentCheckReport {
    bool ok = true;
    std::vector<LaurentCheckStep> steps;
    std::vector<LaurentPoly> final_vars;
};

// Runs the sequence, recording one pass/fail entry per mutation instead
// of throwing on inexact division.
LaurentCheckReport check_laurent(const Seed& s0, const std::vector<int>& ks);

// Deduplication key: the multiset of non-frozen variables in display form
// together with the matrix conjugated by the sorting permutation (frozen
// indices stay put).
std::string seed_key(const Seed& s);

struct FlipGraph {
    struct Edge {
        int from;
        int k;  // mutation index (0-based)
        int to;
    };
    std::vector<Seed> nodes;  // BFS discovery order; nodes[0] is the root
    std::vector<Edge> edges;
    std::vector<int> parent;    // BFS tree, -1 at the root
    std::vector<int> parent_k;  // mutation index from the parent
    bool saturated = false;     // frontier emptied before the depth bound
    bool truncated = false;     // node/edge budget hit, graph is partial
    int depth_reached = 0;

    std::vector<int> path_from_root(int node) const;
};

struct ExploreOptions {
    int max_nodes = 100000;
    int max_edges = 1000000;
};

// Breadth-first closure of mutation over non-frozen indices up to the
// given depth, smallest mutation index first; deterministic.
FlipGraph explore(const Seed& s0, int depth, const ExploreOptions& options = {});

// Union of non-frozen variables over all explored seeds, deduplicated by
// display form, in discovery order.
std::vector<LaurentPoly> cluster_variables(const Seed& s0, int depth,
                                           bool* truncated = nullptr);

struct MembershipVerdict {
    bool laurent_in_all_visited = true;
    bool truncated = false;
    int failed_node = -1;            // index into the explored graph
    std::vector<int> failed_path;    // mutation indices from the root
    std::string detail;
};

// Re-expresses elem in every visited seed's cluster by substitution along
// the BFS tree and checks Laurentness.  A pass is evidence bounded by the
// exploration depth, not a proof of upper-cluster membership.
MembershipVerdict upper_membership(const LaurentPoly& elem, const Seed& s0,
                                   int depth);

// DOT export: nodes labeled by sorted variable display forms, edges by
// 1-based mutation index.
std::string to_dot(const FlipGraph& g);

}  // namespace cluskein

#endif
