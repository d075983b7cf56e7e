#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/families.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Vertices of a connected pointed graph in BFS order from the basepoint:
/// nondecreasing distance, ascending id within a distance class.
/// Throws std::invalid_argument for disconnected graphs.
std::vector<int> bfs_enumeration(const PointedGraph& g);

/// Level n holds every pointed embedding of the pattern prefix induced on
/// the first n+1 BFS vertices; each entry links to the level-(n-1) map it
/// extends. Levels are sorted lexicographically by image tuple.
struct LevelSets {
    std::vector<int> pattern_order;  // BFS enumeration of the pattern
    PointedGraph pattern;
    PointedGraph host;

    struct Entry {
        std::vector<int> image;  // host vertices for pattern_order[0..n]
        int parent = -1;         // index into the previous level
    };
    std::vector<std::vector<Entry>> levels;

    std::vector<std::size_t> sizes() const;
};

/// Builds levels 0..max_level. Requires a connected pattern and
/// max_level <= |V(pattern)| - 1.
LevelSets build_level_sets(const PointedGraph& pattern, const PointedGraph& host, int max_level);

/// Lexicographically least full-pattern map, if the top level is nonempty.
/// Requires levels built to the pattern's full size.
std::optional<EmbeddingMap> stitch_embedding(const LevelSets& levels);

/// Pointed embedding of the path on prefix_len+1 vertices (rooted at its
/// endpoint) into truncate(host, depth) rooted at the natural root, found by
/// the level-set construction. Rejects non-locally-finite hosts.
std::optional<EmbeddingMap> ray_prefix_search(const SymbolicGraph& host, int prefix_len,
                                              int depth);

struct ArrowingTruncation {
    int depth = 0;
    FiniteGraph truncation;
};

/// Least depth d <= depth_cap with truncate(f, d) -> (g, h), if any; an
/// absent result is inconclusive, not a refutation. Monotone truncations
/// plus arrowing monotonicity make the first hit the least one.
std::optional<ArrowingTruncation> finite_arrowing_subgraph(const SymbolicGraph& f,
                                                           const FiniteGraph& g,
                                                           const FiniteGraph& h, int depth_cap);

/// Bounded evidence for the pointed-arrowing transfer: checks the hypothesis
/// side over connected pointed subgraphs of a truncation of g (deduplicated,
/// capped) and the conclusion side over truncations of g itself.
struct TransferReport {
    struct Entry {
        FiniteGraph subgraph;
        int basepoint = 0;
        bool arrows = false;
    };
    std::vector<Entry> hypothesis;
    std::vector<Entry> conclusion;
    bool all_hypothesis_pass = true;
    bool all_conclusion_pass = true;
    bool cap_reached = false;
    int cap = 0;
    int depth = 0;
    int slack = 0;
    std::vector<std::string> warnings;
};

TransferReport bounded_pointed_arrowing_transfer(const SymbolicGraph& f, const SymbolicGraph& g,
                                                 const FiniteGraph& h, int depth, int slack = 0,
                                                 int subgraph_cap = 200);

/// Variant taking the hypothesis-side graph directly as a finite pointed
/// graph; its connected pointed subgraphs are enumerated in place.
TransferReport bounded_pointed_arrowing_transfer(const SymbolicGraph& f, const PointedGraph& g,
                                                 const FiniteGraph& h, int depth, int slack = 0,
                                                 int subgraph_cap = 200);

/// Connected pointed subgraphs containing the basepoint, one per pointed
/// isomorphism class, ordered by edge count then canonical label; at most
/// `cap` of them (the single-vertex subgraph included).
std::vector<PointedGraph> enumerate_connected_pointed_subgraphs(const PointedGraph& host,
                                                                std::size_t cap);

}  // namespace ramsey
