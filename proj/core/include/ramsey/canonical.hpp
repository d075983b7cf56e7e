#pragma once

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Exact canonical label: equal strings iff the graphs are isomorphic.
/// Computed per connected component via iterated degree refinement followed
/// by a pruned minimization over refinement-respecting vertex orderings.
std::string canonical_form(const FiniteGraph& g);

/// Pointed variant; equal strings iff there is a basepoint-preserving
/// isomorphism.
std::string canonical_form(const PointedGraph& g);

/// All pairwise non-isomorphic graphs without isolated vertices within the
/// bounds, including the empty graph, grown edge-by-edge with canonical-form
/// rejection. Ordered by edge count, then canonical label.
std::vector<FiniteGraph> enumerate_nonisomorphic_graphs(int max_vertices, int max_edges);

}  // namespace ramsey
