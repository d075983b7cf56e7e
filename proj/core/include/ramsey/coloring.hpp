#pragma once

#include <map>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Color { Red, Blue };

/// Total red/blue assignment on a finite graph's edge set.
struct Coloring {
    std::map<Edge, Color> assignment;

    static Coloring from_edge_sets(const std::vector<Edge>& red, const std::vector<Edge>& blue);

    /// True iff the domain is exactly g's edge set.
    bool total_on(const FiniteGraph& g) const;

    std::vector<Edge> edges_of(Color c) const;

    /// The graph spanned by edges of the given color (no isolated vertices).
    FiniteGraph subgraph(Color c) const;

    bool operator==(const Coloring&) const = default;
};

}  // namespace ramsey
