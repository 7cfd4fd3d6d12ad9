/*
 * generators.hpp
 * --------------
 * Enumeration of the finite skein generating set: chords between
 * punctures on the disk carrying them, plus loops and arcs described by
 * handle-traversal sequences in which each handle occurs at most once.
 * The output is the indexing superset of the finiteness argument; it is
 * not claimed to be minimal and non-simple entries may occur.
 */
#ifndef CLUSKEIN_GENERATORS_HPP
#define CLUSKEIN_GENERATORS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cluskein/laurent.hpp"
#include "cluskein/surface.hpp"

namespace cluskein {

struct HandleDecomposition {
    int handles = 0;  // h = 2g, plus one per boundary component beyond the first
    std::vector<std::string> strip_marked_points;  // boundary marks, in order
    std::vector<std::string> punctures;            // on the disk boundary
};

// Deterministic strip-plus-handles picture of the surface minus the
// puncture disk; all marked points live on the strip.
HandleDecomposition handle_decomposition(const MarkedSurface& surface);

struct GeneratorDescriptor {
    enum class Kind {
        chord,             // straight segment between two punctures
        loop,              // handle sequence up to rotation and reversal
        arc,               // endpoint pair plus handle sequence
        named_arc,         // an arc class known by name (triangulation edge)
        boundary_inverse,  // formal inverse of a boundary arc class
        decorated_arc,     // vertex-decorated arc class
    };

    Kind kind = Kind::arc;
    std::array<std::string, 2> endpoints;  // chord/arc endpoints
    std::vector<int> handles;              // 1-based handle sequence
    std::string base;                      // edge name for named kinds
    std::vector<std::string> vertices;     // decorating vertex classes
    std::optional<LaurentPoly> expression;  // Laurent form when available

    std::string display() const;
};

struct EnumerationOptions {
    long budget = 2'000'000;
    // Keep only sequences in which both handles of a pair (2i-1, 2i)
    // travel adjacently when both occur; off by default because the
    // pairing depends on the handle-decomposition convention.
    bool bullock_pair_filter = false;
};

// Chords, then loops, then arcs, each block in lexicographic order.
// Throws BudgetExceeded when the descriptor count would pass the budget.
std::vector<GeneratorDescriptor> enumerate_generators(
    const HandleDecomposition& hd, const EnumerationOptions& options = {});

struct GeneratorCounts {
    long chords = 0;
    long loops = 0;
    long arcs = 0;
    long decorated = 0;  // vertex-decorated inflation of chords and arcs
    long total() const { return chords + loops + arcs + decorated; }
    std::string to_json() const;
};

GeneratorCounts generator_count(const MarkedSurface& surface,
                                bool include_decorated = true,
                                const EnumerationOptions& options = {});

}  // namespace cluskein

#endif
