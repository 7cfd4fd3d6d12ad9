#include "cluskein/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cluskein {

Seed initial_seed(const Triangulation& t,
                  const std::vector<std::string>& extra_invertible) {
    Seed s;
    std::vector<std::string> names = t.edge_names;
    names.insert(names.end(), extra_invertible.begin(), extra_invertible.end());
    s.table = VarTable::ambient(std::move(names));
    s.matrix = exchange_matrix(t);
    s.vars.reserve(t.edge_count());
    for (int e = 0; e < t.edge_count(); ++e)
        s.vars.push_back(LaurentPoly::variable(s.table, e));
    return s;
}

ExchangeMatrix matrix_mutate(const ExchangeMatrix& B, int k) {
    if (k < 0 || k >= B.n)
        throw UnknownVariable("matrix_mutate: index out of range");
    if (B.frozen[k])
        throw FrozenEdge("cannot mutate frozen index " + std::to_string(k + 1));
    ExchangeMatrix out = B;
    for (int i = 0; i < B.n; ++i) {
        for (int j = 0; j < B.n; ++j) {
            if (i == k || j == k)
                out.at(i, j) = -B.at(i, j);
            else
                out.at(i, j) = B.at(i, j) + (std::abs(B.at(i, k)) * B.at(k, j) +
                                             B.at(i, k) * std::abs(B.at(k, j))) /
                                                2;
        }
    }
    return out;
}

namespace {

LaurentPoly binomial_from(const ExchangeMatrix& B, int k,
                          const VarTablePtr& table,
                          const std::vector<LaurentPoly>* vars) {
    LaurentPoly plus = LaurentPoly::constant(table, 1);
    LaurentPoly minus = LaurentPoly::constant(table, 1);
    for (int j = 0; j < B.n; ++j) {
        int b = B.at(j, k);
        if (b == 0) continue;
        LaurentPoly base =
            vars ? (*vars)[j] : LaurentPoly::variable(table, j);
        if (b > 0)
            plus *= pow(base, b);
        else
            minus *= pow(base, -b);
    }
    return plus + minus;
}

}  // namespace

LaurentPoly exchange_binomial(const Seed& s, int k) {
    return binomial_from(s.matrix, k, s.table, &s.vars);
}

LaurentPoly formal_exchange_binomial(const ExchangeMatrix& B,
                                     const VarTablePtr& table, int k) {
    return binomial_from(B, k, table, nullptr);
}

Seed mutate(const Seed& s, int k) {
    if (k < 0 || k >= s.size())
        throw UnknownVariable("mutate: index out of range");
    if (s.frozen(k))
        throw FrozenEdge("cannot mutate frozen index " + std::to_string(k + 1));
    Seed out = s;
    out.vars[k] = exact_divide(exchange_binomial(s, k), s.vars[k]);
    out.matrix = matrix_mutate(s.matrix, k);
    return out;
}

Seed mutate_sequence(const Seed& s, const std::vector<int>& ks) {
    Seed cur = s;
    for (int k : ks) cur = mutate(cur, k);
    return cur;
}

LaurentCheckReport check_laurent(const Seed& s0, const std::vector<int>& ks) {
    LaurentCheckReport report;
    Seed cur = s0;
    for (int k : ks) {
        LaurentCheckStep step;
        step.k = k;
        try {
            cur = mutate(cur, k);
        } catch (const InexactDivision& e) {
            step.ok = false;
            step.error = e.what();
            report.ok = false;
        }
        report.steps.push_back(std::move(step));
        if (!report.ok) break;
    }
    report.final_vars = cur.vars;
    return report;
}

// ----------------------------------------------------------------- explore

std::string seed_key(const Seed& s) {
    std::vector<int> mutable_idx, frozen_idx;
    for (int i = 0; i < s.size(); ++i)
        (s.frozen(i) ? frozen_idx : mutable_idx).push_back(i);

    std::vector<std::pair<std::string, int>> sorted;
    sorted.reserve(mutable_idx.size());
    for (int i : mutable_idx) sorted.emplace_back(s.vars[i].to_string(), i);
    std::sort(sorted.begin(), sorted.end());

    std::vector<int> perm;
    perm.reserve(s.size());
    for (const auto& [str, i] : sorted) perm.push_back(i);
    perm.insert(perm.end(), frozen_idx.begin(), frozen_idx.end());

    std::ostringstream key;
    for (const auto& [str, i] : sorted) key << str << ";";
    key << "|";
    for (int i : perm)
        for (int j : perm) key << s.matrix.at(i, j) << ",";
    return key.str();
}

std::vector<int> FlipGraph::path_from_root(int node) const {
    std::vector<int> path;
    for (int cur = node; parent[cur] != -1; cur = parent[cur])
        path.push_back(parent_k[cur]);
    std::reverse(path.begin(), path.end());
    return path;
}

FlipGraph explore(const Seed& s0, int depth, const ExploreOptions& options) {
    FlipGraph g;
    g.nodes.push_back(s0);
    g.parent.push_back(-1);
    g.parent_k.push_back(-1);
    std::map<std::string, int> keys;
    keys.emplace(seed_key(s0), 0);
    // Edges are unordered node pairs: the reverse direction of a known
    // edge may be rediscovered under a permuted slot label.
    std::set<std::pair<int, int>> seen_edges;

    std::vector<int> mutable_idx;
    for (int i = 0; i < s0.size(); ++i)
        if (!s0.frozen(i)) mutable_idx.push_back(i);

    std::vector<int> frontier = {0};
    for (int d = 1; d <= depth && !frontier.empty(); ++d) {
        std::vector<int> next;
        for (int i : frontier) {
            for (int k : mutable_idx) {
                Seed s = mutate(g.nodes[i], k);
                std::string key = seed_key(s);
                auto [it, inserted] =
                    keys.emplace(std::move(key), static_cast<int>(g.nodes.size()));
                int j = it->second;
                if (inserted) {
                    if (static_cast<int>(g.nodes.size()) >= options.max_nodes) {
                        g.truncated = true;
                        keys.erase(it);
                        return g;
                    }
                    g.nodes.push_back(std::move(s));
                    g.parent.push_back(i);
                    g.parent_k.push_back(k);
                    next.push_back(j);
                }
                auto edge = std::make_pair(std::min(i, j), std::max(i, j));
                if (seen_edges.insert(edge).second) {
                    if (static_cast<int>(g.edges.size()) >= options.max_edges) {
                        g.truncated = true;
                        return g;
                    }
                    g.edges.push_back(FlipGraph::Edge{i, k, j});
                }
            }
        }
        if (!next.empty()) g.depth_reached = d;
        frontier = std::move(next);
    }
    g.saturated = frontier.empty();
    return g;
}

std::vector<LaurentPoly> cluster_variables(const Seed& s0, int depth,
                                           bool* truncated) {
    FlipGraph g = explore(s0, depth);
    if (truncated) *truncated = g.truncated;
    std::vector<LaurentPoly> out;
    std::set<std::string> seen;
    for (const Seed& s : g.nodes) {
        for (int i = 0; i < s.size(); ++i) {
            if (s.frozen(i)) continue;
            if (seen.insert(s.vars[i].to_string()).second)
                out.push_back(s.vars[i]);
        }
    }
    return out;
}

// -------------------------------------------------------- upper_membership

namespace {

// Rewrites an expression in the cluster of seed s into the cluster of
// mutate(s, k).  Writing y for the old cluster and z for the new one,
// y_k = (M+ + M-)(z) / z_k with the binomial taken on formal variables;
// clearing y_k-denominators first keeps every intermediate a Laurent
// polynomial, and the final exact division decides Laurentness.
LaurentPoly reexpress_step(const LaurentPoly& expr, const Seed& s, int k) {
    const VarTablePtr& table = expr.table();
    int min_k = 0;
    for (const auto& [e, c] : expr.terms()) min_k = std::min(min_k, e[k]);
    long d = -static_cast<long>(min_k);

    ExpVec shift(table->size(), 0);
    shift[k] = static_cast<int>(d);
    LaurentPoly cleared =
        expr * LaurentPoly::monomial(table, std::move(shift), 1);

    LaurentPoly binom = formal_exchange_binomial(s.matrix, table, k);
    ExpVec inv(table->size(), 0);
    inv[k] = -1;
    LaurentPoly image = binom * LaurentPoly::monomial(table, std::move(inv), 1);

    Assignment sigma;
    sigma.emplace(k, SubstImage(image));
    LaurentPoly rewritten = substitute(cleared, sigma);
    if (d == 0) return rewritten;

    ExpVec unshift(table->size(), 0);
    unshift[k] = static_cast<int>(d);
    LaurentPoly num =
        rewritten * LaurentPoly::monomial(table, std::move(unshift), 1);
    return exact_divide(num, pow(binom, d));
}

}  // namespace

MembershipVerdict upper_membership(const LaurentPoly& elem, const Seed& s0,
                                   int depth) {
    MembershipVerdict verdict;
    FlipGraph g = explore(s0, depth);
    verdict.truncated = g.truncated;

    std::vector<LaurentPoly> expr;
    expr.reserve(g.nodes.size());
    expr.push_back(elem);
    for (size_t j = 1; j < g.nodes.size(); ++j) {
        const Seed& parent_seed = g.nodes[static_cast<size_t>(g.parent[j])];
        try {
            expr.push_back(reexpress_step(expr[static_cast<size_t>(g.parent[j])],
                                          parent_seed, g.parent_k[j]));
        } catch (const InexactDivision& e) {
            verdict.laurent_in_all_visited = false;
            verdict.failed_node = static_cast<int>(j);
            verdict.failed_path = g.path_from_root(static_cast<int>(j));
            verdict.detail = e.what();
            return verdict;
        }
    }
    return verdict;
}

// -------------------------------------------------------------------- DOT

std::string to_dot(const FlipGraph& g) {
    std::ostringstream out;
    out << "graph exchange {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const Seed& s = g.nodes[i];
        std::vector<std::string> labels;
        for (int v = 0; v < s.size(); ++v)
            if (!s.frozen(v)) labels.push_back(s.vars[v].to_string());
        std::sort(labels.begin(), labels.end());
        out << "  n" << i << " [label=\"";
        for (size_t l = 0; l < labels.size(); ++l) {
            if (l) out << ", ";
            out << labels[l];
        }
        out << "\"];\n";
    }
    for (const auto& e : g.edges)
        out << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.k + 1
            << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace cluskein
