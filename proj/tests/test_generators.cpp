#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cluskein/generators.hpp"
#include "oracles.hpp"

using namespace cluskein;
using cluskein::testing::loops_equivalent;

namespace {

HandleDecomposition bare_handles(int h) {
    HandleDecomposition hd;
    hd.handles = h;
    return hd;
}

std::vector<GeneratorDescriptor> loops_only(int h,
                                            EnumerationOptions opts = {}) {
    auto all = enumerate_generators(bare_handles(h), opts);
    std::vector<GeneratorDescriptor> out;
    for (auto& d : all)
        if (d.kind == GeneratorDescriptor::Kind::loop) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("handle decomposition of the builtin surfaces") {
    auto disk = handle_decomposition(MarkedSurface{0, {4}, 0});
    CHECK(disk.handles == 0);
    CHECK(disk.strip_marked_points.size() == 4);
    CHECK(disk.punctures.empty());

    auto torus = handle_decomposition(MarkedSurface{1, {}, 1});
    CHECK(torus.handles == 2);
    CHECK(torus.punctures == std::vector<std::string>{"v1"});
    CHECK(torus.strip_marked_points.empty());

    auto sphere = handle_decomposition(MarkedSurface{0, {}, 5});
    CHECK(sphere.handles == 0);
    CHECK(sphere.punctures.size() == 5);

    auto annulus = handle_decomposition(MarkedSurface{0, {1, 1}, 0});
    CHECK(annulus.handles == 1);

    CHECK_THROWS_AS(handle_decomposition(MarkedSurface{0, {}, 2}),
                    InvalidSurface);
}

TEST_CASE("enumeration: chords of the 4-punctured planar picture") {
    HandleDecomposition hd;
    hd.handles = 0;
    hd.punctures = {"v1", "v2", "v3", "v4"};
    auto gens = enumerate_generators(hd);
    int chords = 0, arcs = 0;
    for (const auto& d : gens) {
        if (d.kind == GeneratorDescriptor::Kind::chord) ++chords;
        if (d.kind == GeneratorDescriptor::Kind::arc) {
            ++arcs;
            CHECK(d.handles.empty());
        }
    }
    CHECK(chords == 6);        // C(4,2)
    CHECK(arcs == 4 * 5 / 2);  // unordered pairs including same-endpoint
}

TEST_CASE("enumeration: loop sequences for two handles") {
    auto loops = loops_only(2);
    REQUIRE(loops.size() == 3);
    CHECK(loops[0].handles == std::vector<int>{1});
    CHECK(loops[1].handles == std::vector<int>{1, 2});
    CHECK(loops[2].handles == std::vector<int>{2});
}

TEST_CASE("enumeration: boundary-only strip arcs") {
    for (int m : {2, 3, 5}) {
        HandleDecomposition hd;
        hd.handles = 0;
        for (int i = 1; i <= m; ++i)
            hd.strip_marked_points.push_back("m" + std::to_string(i));
        auto gens = enumerate_generators(hd);
        CHECK(static_cast<int>(gens.size()) == m * (m - 1) / 2 + m);
    }
}

TEST_CASE("every emitted handle sequence uses each handle at most once") {
    for (int h : {1, 2, 3, 4}) {
        HandleDecomposition hd = bare_handles(h);
        hd.punctures = {"v1"};
        hd.strip_marked_points = {"m1"};
        for (const auto& d : enumerate_generators(hd)) {
            std::set<int> seen;
            for (int handle : d.handles) {
                CHECK(handle >= 1);
                CHECK(handle <= h);
                CHECK(seen.insert(handle).second);
            }
        }
    }
}

TEST_CASE("loop dedup matches the quadratic pairwise oracle") {
    for (int h = 1; h <= 4; ++h) {
        auto loops = loops_only(h);
        // No two emitted loops are related by rotation or reversal.
        for (size_t i = 0; i < loops.size(); ++i)
            for (size_t j = i + 1; j < loops.size(); ++j)
                CHECK_FALSE(
                    loops_equivalent(loops[i].handles, loops[j].handles));
        // Classes of the full tuple set, counted by brute force.
        std::vector<std::vector<int>> all;
        std::function<void(std::vector<int>&, std::vector<bool>&)> rec =
            [&](std::vector<int>& seq, std::vector<bool>& used) {
                if (!seq.empty()) all.push_back(seq);
                for (int v = 1; v <= h; ++v) {
                    if (used[v]) continue;
                    used[v] = true;
                    seq.push_back(v);
                    rec(seq, used);
                    seq.pop_back();
                    used[v] = false;
                }
            };
        std::vector<int> seq;
        std::vector<bool> used(h + 1, false);
        rec(seq, used);
        std::vector<std::vector<int>> classes;
        for (const auto& candidate : all) {
            bool found = false;
            for (const auto& rep : classes)
                if (loops_equivalent(candidate, rep)) found = true;
            if (!found) classes.push_back(candidate);
        }
        CHECK(loops.size() == classes.size());
    }
}

TEST_CASE("generator counts per surface") {
    auto disk = generator_count(MarkedSurface{0, {4}, 0});
    CHECK(disk.chords == 0);
    CHECK(disk.loops == 0);
    CHECK(disk.decorated == 0);
    CHECK(disk.total() > 0);

    auto torus = generator_count(MarkedSurface{1, {}, 1});
    CHECK(torus.chords == 0);
    CHECK(torus.loops == 3);
    CHECK(torus.arcs == 4);  // (), (1), (2), (1,2) from v1 to itself
    // Same-puncture arcs inflate by v and v^2.
    CHECK(torus.decorated == 2 * torus.arcs);
    CHECK(torus.to_json() ==
          "{\"chords\":0,\"loops\":3,\"arcs\":4,\"decorated\":8,\"total\":15}");
}

TEST_CASE("counts are monotone in the puncture count for fixed handles") {
    long previous = -1;
    for (int n = 4; n <= 7; ++n) {
        auto c = generator_count(MarkedSurface{0, {}, n});
        CHECK(c.total() > previous);
        previous = c.total();
        CHECK(c.chords == static_cast<long>(n) * (n - 1) / 2);
    }
}

TEST_CASE("output size stays within the precomputed finiteness bound") {
    for (int h : {0, 1, 2, 3}) {
        HandleDecomposition hd = bare_handles(h);
        hd.punctures = {"v1", "v2", "v3"};
        hd.strip_marked_points = {"m1", "m2"};
        long tuples = 0, partial = 1;
        for (int k = 1; k <= h; ++k) {
            partial *= (h - k + 1);
            tuples += partial;
        }
        long points = 5;
        long bound = 3 + tuples + points * (points + 1) / 2 * (tuples + 1);
        auto gens = enumerate_generators(hd);
        CHECK(static_cast<long>(gens.size()) <= bound);
    }
}

TEST_CASE("budget guard on combinatorial blow-up") {
    EnumerationOptions tight;
    tight.budget = 10;
    HandleDecomposition hd = bare_handles(6);
    hd.punctures = {"v1", "v2"};
    CHECK_THROWS_AS(enumerate_generators(hd, tight), BudgetExceeded);
}

TEST_CASE("Bullock pair filter keeps paired handles adjacent") {
    EnumerationOptions filtered;
    filtered.bullock_pair_filter = true;
    HandleDecomposition hd = bare_handles(4);
    hd.strip_marked_points = {"m1", "m2"};
    for (const auto& d : enumerate_generators(hd, filtered)) {
        int pos1 = -1, pos2 = -1;
        for (size_t i = 0; i < d.handles.size(); ++i) {
            if (d.handles[i] == 1) pos1 = static_cast<int>(i);
            if (d.handles[i] == 2) pos2 = static_cast<int>(i);
        }
        if (pos1 != -1 && pos2 != -1) {
            int n = static_cast<int>(d.handles.size());
            int dist = std::abs(pos1 - pos2);
            if (d.kind == GeneratorDescriptor::Kind::loop)
                dist = std::min(dist, n - dist);
            CHECK(dist == 1);
        }
    }
    // The unfiltered output strictly contains the filtered one.
    CHECK(enumerate_generators(hd, filtered).size() <
          enumerate_generators(hd).size());
}

TEST_CASE("descriptor display forms") {
    GeneratorDescriptor chord;
    chord.kind = GeneratorDescriptor::Kind::chord;
    chord.endpoints = {"v1", "v3"};
    CHECK(chord.display() == "chord v1 v3");

    GeneratorDescriptor loop;
    loop.kind = GeneratorDescriptor::Kind::loop;
    loop.handles = {1, 2};
    CHECK(loop.display() == "loop 1,2");

    GeneratorDescriptor arc;
    arc.kind = GeneratorDescriptor::Kind::arc;
    arc.endpoints = {"m1", "v2"};
    arc.handles = {2, 1};
    CHECK(arc.display() == "arc m1,v2 via 2,1");
    arc.handles.clear();
    CHECK(arc.display() == "arc m1,v2");
}
