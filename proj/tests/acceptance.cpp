// Acceptance suite: one criterion per run_criterion call, each printed as
// a single pass/fail line with its runtime against the pinned limit.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cluskein/cluster.hpp"
#include "cluskein/generators.hpp"
#include "cluskein/skein.hpp"
#include "oracles.hpp"

using namespace cluskein;
using cluskein::testing::loops_equivalent;
using cluskein::testing::polygon_diagonal_count;
using cluskein::testing::polygon_triangulations;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;
int index = 0;

void require(Outcome& outcome, bool condition, const std::string& what) {
    if (condition) return;
    outcome.ok = false;
    if (!outcome.detail.empty()) outcome.detail += "; ";
    outcome.detail += what;
}

void run_criterion(const std::string& name, double limit_seconds,
                   const std::function<void(Outcome&)>& body) {
    ++index;
    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds >= limit_seconds) {
        outcome.ok = false;
        outcome.detail += (outcome.detail.empty() ? "" : "; ");
        outcome.detail += "runtime limit exceeded";
    }
    std::ostringstream line;
    line << "[" << index << "/8] " << name << " ... "
         << (outcome.ok ? "PASS" : "FAIL") << " (" << seconds << "s < "
         << limit_seconds << "s)";
    if (!outcome.ok) line << "  " << outcome.detail;
    std::cout << line.str() << "\n";
    if (!outcome.ok) ++failures;
}

Seed torus_seed() {
    return initial_seed(builtin_punctured_torus().triangulation);
}

Seed disk_seed(int n) { return initial_seed(builtin_disk(n).triangulation); }

void all_sequences(const Seed& s0, int maxlen, Outcome& outcome) {
    std::function<void(const Seed&, int)> walk = [&](const Seed& at,
                                                     int remaining) {
        if (remaining == 0 || !outcome.ok) return;
        for (int k = 0; k < at.size() && outcome.ok; ++k) {
            if (at.frozen(k)) continue;
            try {
                Seed next = mutate(at, k);
                walk(next, remaining - 1);
            } catch (const InexactDivision& e) {
                require(outcome, false,
                        std::string("inexact division: ") + e.what());
            }
        }
    };
    walk(s0, maxlen);
}

}  // namespace

int main() {
    run_criterion(
        "exchange matrix of the once-punctured torus and its mutation",
        1.0, [](Outcome& o) {
            auto B = exchange_matrix(builtin_punctured_torus().triangulation);
            require(o, B.to_json() == "[[0,2,-2],[-2,0,2],[2,-2,0]]",
                    "B mismatch: " + B.to_json());
            auto B3 = matrix_mutate(B, 2);
            require(o, B3.to_json() == "[[0,-2,2],[2,0,-2],[-2,2,0]]",
                    "mutated B mismatch: " + B3.to_json());
        });

    run_criterion("mutation involution on 1000 random seeds", 30.0,
                  [](Outcome& o) {
                      std::mt19937 rng(987654321);
                      std::vector<Seed> pool;
                      for (int n = 4; n <= 8; ++n) pool.push_back(disk_seed(n));
                      pool.push_back(torus_seed());
                      for (int iter = 0; iter < 1000 && o.ok; ++iter) {
                          Seed s = pool[rng() % pool.size()];
                          std::vector<int> idx;
                          for (int i = 0; i < s.size(); ++i)
                              if (!s.frozen(i)) idx.push_back(i);
                          int walk = static_cast<int>(rng() % 5);
                          for (int w = 0; w < walk; ++w)
                              s = mutate(s, idx[rng() % idx.size()]);
                          int k = idx[rng() % idx.size()];
                          require(o, mutate(mutate(s, k), k) == s,
                                  "involution failed at iteration " +
                                      std::to_string(iter));
                      }
                  });

    run_criterion(
        "Laurent phenomenon along every bounded mutation sequence", 120.0,
        [](Outcome& o) {
            all_sequences(torus_seed(), 6, o);
            all_sequences(disk_seed(6), 8, o);
        });

    run_criterion(
        "polygon exchange graphs saturate at Catalan counts", 60.0,
        [](Outcome& o) {
            const int expected_nodes[] = {2, 5, 14, 42, 132};
            for (int n = 4; n <= 8; ++n) {
                // Brute-force oracle: non-crossing diagonal sets.
                auto oracle = polygon_triangulations(n);
                require(o,
                        static_cast<int>(oracle.size()) == expected_nodes[n - 4],
                        "oracle count mismatch at n=" + std::to_string(n));
                auto g = explore(disk_seed(n), 24);
                require(o, g.saturated && !g.truncated,
                        "exploration did not saturate at n=" +
                            std::to_string(n));
                require(o, g.nodes.size() == oracle.size(),
                        "node count " + std::to_string(g.nodes.size()) +
                            " != " + std::to_string(oracle.size()) + " at n=" +
                            std::to_string(n));
                auto vars = cluster_variables(disk_seed(n), 24);
                require(o,
                        static_cast<int>(vars.size()) ==
                            polygon_diagonal_count(n),
                        "variable count mismatch at n=" + std::to_string(n));
                require(o, polygon_diagonal_count(n) == n * (n - 3) / 2,
                        "diagonal oracle mismatch at n=" + std::to_string(n));
            }
        });

    run_criterion(
        "path-independence of matrix mutation under flips", 30.0,
        [](Outcome& o) {
            for (int n = 4; n <= 6; ++n) {
                // The full labeled flip orbit of the disk.
                std::vector<Triangulation> orbit = {
                    builtin_disk(n).triangulation};
                std::set<std::string> seen;
                auto key = [](const Triangulation& t) {
                    std::string k;
                    for (const auto& tri : t.canonical().triangles)
                        k += std::to_string(tri[0]) + "." +
                             std::to_string(tri[1]) + "." +
                             std::to_string(tri[2]) + ";";
                    return k;
                };
                seen.insert(key(orbit[0]));
                for (size_t i = 0; i < orbit.size(); ++i) {
                    auto B = exchange_matrix(orbit[i]);
                    for (int k : orbit[i].interior_edges()) {
                        auto flipped = flip(orbit[i], k);
                        require(o,
                                exchange_matrix(flipped) == matrix_mutate(B, k),
                                "mismatch on disk(" + std::to_string(n) + ")");
                        if (seen.insert(key(flipped)).second)
                            orbit.push_back(std::move(flipped));
                    }
                }
            }
            // Punctured-torus triangulations within flip distance 4.
            std::vector<Triangulation> frontier = {
                builtin_punctured_torus().triangulation};
            for (int d = 0; d < 4; ++d) {
                std::vector<Triangulation> next;
                for (const auto& t : frontier) {
                    auto B = exchange_matrix(t);
                    for (int k : t.interior_edges()) {
                        auto f = flip(t, k);
                        require(o, exchange_matrix(f) == matrix_mutate(B, k),
                                "mismatch on the punctured torus");
                        next.push_back(std::move(f));
                    }
                }
                frontier = std::move(next);
            }
        });

    run_criterion("Ptolemy identity on the disk(4) flip", 1.0, [](Outcome& o) {
        auto s = disk_seed(4);
        auto m = mutate(s, 4);
        auto pinned = s.vars[0] * s.vars[2] + s.vars[1] * s.vars[3];
        require(o, s.vars[4] * m.vars[4] == pinned,
                "x*x' != x1*x3 + x2*x4");
        require(o, m.vars[4].to_string() == "x1*x3*x5^-1 + x2*x4*x5^-1",
                "unexpected flipped variable " + m.vars[4].to_string());
    });

    run_criterion(
        "rho-compatibility at the digon flip and injectivity evidence", 10.0,
        [](Outcome& o) {
            auto d = builtin_punctured_digon();
            auto ring = make_ambient(d.triangulation, d.endpoints, d.punctures);
            auto seed = ambient_seed(ring);
            auto tags =
                make_tagged(d.surface, d.triangulation, d.endpoints, d.punctures);
            int k = ring.triangulation.index_of("a");
            auto report = check_flip_compatibility(ring, seed, k, tags);
            require(o, report.ok && report.configuration == "punctured-digon",
                    "digon identity failed");
            auto sides = ring.edge_var("x2") + ring.edge_var("x3");
            require(o, report.lhs == sides && report.rhs == sides,
                    "digon sides mismatch");

            for (int n : {5, 6}) {
                auto vars = cluster_variables(disk_seed(n), 24);
                for (size_t i = 0; i < vars.size() && o.ok; ++i)
                    for (size_t j = i + 1; j < vars.size() && o.ok; ++j)
                        require(o, vars[i] != vars[j],
                                "coinciding cluster variables on disk(" +
                                    std::to_string(n) + ")");
            }
        });

    run_criterion(
        "generator enumeration: handle property, dedup oracle, loop count",
        10.0, [](Outcome& o) {
            for (int h = 1; h <= 4; ++h) {
                HandleDecomposition hd;
                hd.handles = h;
                hd.punctures = {"v1", "v2"};
                hd.strip_marked_points = {"m1"};
                std::vector<std::vector<int>> loops;
                for (const auto& d : enumerate_generators(hd)) {
                    std::set<int> seen;
                    for (int handle : d.handles)
                        require(o,
                                handle >= 1 && handle <= h &&
                                    seen.insert(handle).second,
                                "handle used twice in " + d.display());
                    if (d.kind == GeneratorDescriptor::Kind::loop)
                        loops.push_back(d.handles);
                }
                for (size_t i = 0; i < loops.size(); ++i)
                    for (size_t j = i + 1; j < loops.size(); ++j)
                        require(o, !loops_equivalent(loops[i], loops[j]),
                                "duplicate loop descriptors at h=" +
                                    std::to_string(h));
                // Quadratic brute-force class count.
                std::vector<std::vector<int>> all;
                std::vector<int> seq;
                std::vector<bool> used(h + 1, false);
                std::function<void()> rec = [&]() {
                    if (!seq.empty()) all.push_back(seq);
                    for (int v = 1; v <= h; ++v) {
                        if (used[v]) continue;
                        used[v] = true;
                        seq.push_back(v);
                        rec();
                        seq.pop_back();
                        used[v] = false;
                    }
                };
                rec();
                std::vector<std::vector<int>> classes;
                for (const auto& cand : all) {
                    bool found = false;
                    for (const auto& rep : classes)
                        if (loops_equivalent(cand, rep)) found = true;
                    if (!found) classes.push_back(cand);
                }
                require(o, loops.size() == classes.size(),
                        "loop dedup disagrees with the oracle at h=" +
                            std::to_string(h));
            }
            HandleDecomposition two;
            two.handles = 2;
            int loop_count = 0;
            for (const auto& d : enumerate_generators(two))
                if (d.kind == GeneratorDescriptor::Kind::loop) ++loop_count;
            require(o, loop_count == 3,
                    "expected 3 loop descriptors for h=2, got " +
                        std::to_string(loop_count));
        });

    if (failures == 0)
        std::cout << "all 8 acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures;
}
