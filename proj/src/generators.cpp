#include "cluskein/generators.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cluskein {

HandleDecomposition handle_decomposition(const MarkedSurface& surface) {
    surface.require_triangulable();
    HandleDecomposition hd;
    hd.handles = 2 * surface.genus +
                 (surface.boundary.empty()
                      ? 0
                      : static_cast<int>(surface.boundary.size()) - 1);
    for (int i = 1; i <= surface.boundary_marked_points(); ++i)
        hd.strip_marked_points.push_back("m" + std::to_string(i));
    for (int i = 1; i <= surface.punctures; ++i)
        hd.punctures.push_back("v" + std::to_string(i));
    return hd;
}

namespace {

// Lexicographically least representative under rotation and reversal.
std::vector<int> loop_canonical(const std::vector<int>& seq) {
    std::vector<int> best = seq;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> probe = seq;
        if (dir) std::reverse(probe.begin(), probe.end());
        for (size_t r = 0; r < probe.size(); ++r) {
            std::rotate(probe.begin(), probe.begin() + 1, probe.end());
            if (probe < best) best = probe;
        }
    }
    return best;
}

// All nonempty ordered tuples of distinct handles from 1..h.
void distinct_tuples(int h, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> seq;
    std::vector<bool> used(h + 1, false);
    std::function<void()> rec = [&]() {
        if (!seq.empty()) emit(seq);
        if (static_cast<int>(seq.size()) == h) return;
        for (int next = 1; next <= h; ++next) {
            if (used[next]) continue;
            used[next] = true;
            seq.push_back(next);
            rec();
            seq.pop_back();
            used[next] = false;
        }
    };
    rec();
}

bool pairs_adjacent(const std::vector<int>& seq, bool cyclic) {
    const int n = static_cast<int>(seq.size());
    if (n == 0) return true;
    int hmax = *std::max_element(seq.begin(), seq.end());
    for (int first = 1; first < hmax; first += 2) {
        int pos1 = -1, pos2 = -1;
        for (int i = 0; i < n; ++i) {
            if (seq[i] == first) pos1 = i;
            if (seq[i] == first + 1) pos2 = i;
        }
        if (pos1 == -1 || pos2 == -1) continue;
        int dist = std::abs(pos1 - pos2);
        if (cyclic) dist = std::min(dist, n - dist);
        if (dist != 1) return false;
    }
    return true;
}

}  // namespace

std::string GeneratorDescriptor::display() const {
    auto join = [](const std::vector<int>& handles) {
        std::ostringstream out;
        for (size_t i = 0; i < handles.size(); ++i) {
            if (i) out << ",";
            out << handles[i];
        }
        return out.str();
    };
    switch (kind) {
        case Kind::chord:
            return "chord " + endpoints[0] + " " + endpoints[1];
        case Kind::loop:
            return "loop " + join(handles);
        case Kind::arc:
            return handles.empty()
                       ? "arc " + endpoints[0] + "," + endpoints[1]
                       : "arc " + endpoints[0] + "," + endpoints[1] + " via " +
                             join(handles);
        case Kind::named_arc:
            return "arc-class " + base;
        case Kind::boundary_inverse:
            return "inverse " + base;
        case Kind::decorated_arc: {
            std::string prefix;
            for (const auto& v : vertices) prefix += v + "*";
            return "decorated " + prefix + base;
        }
    }
    return "";
}

std::vector<GeneratorDescriptor> enumerate_generators(
    const HandleDecomposition& hd, const EnumerationOptions& options) {
    const int h = hd.handles;

    // Explicit finiteness bound: chords + loop tuples + pair-indexed arcs.
    long tuples = 0, partial = 1;
    for (int k = 1; k <= h; ++k) {
        partial *= (h - k + 1);
        tuples += partial;
    }
    long points =
        static_cast<long>(hd.strip_marked_points.size() + hd.punctures.size());
    long pair_count = points * (points + 1) / 2;
    long np = static_cast<long>(hd.punctures.size());
    long bound = np * (np - 1) / 2 + tuples + pair_count * (tuples + 1);
    if (bound > options.budget)
        throw BudgetExceeded("generator enumeration bound " +
                             std::to_string(bound) + " exceeds budget " +
                             std::to_string(options.budget));

    std::vector<GeneratorDescriptor> out;

    for (size_t i = 0; i < hd.punctures.size(); ++i) {
        for (size_t j = i + 1; j < hd.punctures.size(); ++j) {
            GeneratorDescriptor d;
            d.kind = GeneratorDescriptor::Kind::chord;
            d.endpoints = {hd.punctures[i], hd.punctures[j]};
            out.push_back(std::move(d));
        }
    }

    std::vector<std::vector<int>> loops;
    distinct_tuples(h, [&](const std::vector<int>& seq) {
        if (seq != loop_canonical(seq)) return;
        if (options.bullock_pair_filter && !pairs_adjacent(seq, true)) return;
        loops.push_back(seq);
    });
    std::sort(loops.begin(), loops.end());
    for (auto& seq : loops) {
        GeneratorDescriptor d;
        d.kind = GeneratorDescriptor::Kind::loop;
        d.handles = std::move(seq);
        out.push_back(std::move(d));
    }

    // Arc endpoints range over every marked point on the strip.
    std::vector<std::string> points_all = hd.strip_marked_points;
    points_all.insert(points_all.end(), hd.punctures.begin(),
                      hd.punctures.end());
    for (size_t i = 0; i < points_all.size(); ++i) {
        for (size_t j = i; j < points_all.size(); ++j) {
            std::vector<std::vector<int>> seqs = {{}};
            distinct_tuples(h, [&](const std::vector<int>& seq) {
                if (i == j) {
                    // Same-endpoint arcs are reversible in place.
                    std::vector<int> rev(seq.rbegin(), seq.rend());
                    if (rev < seq) return;
                }
                if (options.bullock_pair_filter && !pairs_adjacent(seq, false))
                    return;
                seqs.push_back(seq);
            });
            std::sort(seqs.begin(), seqs.end());
            for (auto& seq : seqs) {
                GeneratorDescriptor d;
                d.kind = GeneratorDescriptor::Kind::arc;
                d.endpoints = {points_all[i], points_all[j]};
                d.handles = std::move(seq);
                out.push_back(std::move(d));
            }
        }
    }
    if (static_cast<long>(out.size()) > bound)
        throw Error("enumeration produced " + std::to_string(out.size()) +
                    " descriptors above its finiteness bound " +
                    std::to_string(bound));
    return out;
}

std::string GeneratorCounts::to_json() const {
    std::ostringstream out;
    out << "{\"chords\":" << chords << ",\"loops\":" << loops
        << ",\"arcs\":" << arcs << ",\"decorated\":" << decorated
        << ",\"total\":" << total() << "}";
    return out.str();
}

GeneratorCounts generator_count(const MarkedSurface& surface,
                                bool include_decorated,
                                const EnumerationOptions& options) {
    HandleDecomposition hd = handle_decomposition(surface);
    auto descriptors = enumerate_generators(hd, options);
    GeneratorCounts counts;
    auto is_puncture = [&](const std::string& p) {
        return !p.empty() && p[0] == 'v';
    };
    for (const auto& d : descriptors) {
        switch (d.kind) {
            case GeneratorDescriptor::Kind::chord:
                ++counts.chords;
                if (include_decorated) counts.decorated += 3;
                break;
            case GeneratorDescriptor::Kind::loop:
                ++counts.loops;
                break;
            case GeneratorDescriptor::Kind::arc: {
                ++counts.arcs;
                if (!include_decorated) break;
                bool p0 = is_puncture(d.endpoints[0]);
                bool p1 = is_puncture(d.endpoints[1]);
                if (p0 && p1)
                    counts.decorated += d.endpoints[0] == d.endpoints[1] ? 2 : 3;
                else if (p0 || p1)
                    counts.decorated += 1;
                break;
            }
            default:
                break;
        }
    }
    return counts;
}

}  // namespace cluskein
