#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Finite-or-countably-infinite count. Arithmetic saturates at infinity.
struct Cardinal {
    bool infinite = false;
    int value = 0;

    static Cardinal inf() { return {true, 0}; }
    static Cardinal of(int k) { return {false, k}; }

    Cardinal operator+(const Cardinal& o) const {
        if (infinite || o.infinite) return inf();
        return of(value + o.value);
    }
    bool operator==(const Cardinal&) const = default;
};

/// Adjacency bit-vector of a leaf against the hubs x_1..x_n.
using Signature = std::vector<std::uint8_t>;

/// Symbolic description of a graph with a hub set X = {x_1..x_n} such that
/// every edge meets X: optional hub-hub edges plus leaf classes keyed by
/// their hub-adjacency signature, each with a finite or infinite count.
///
/// Only finitely many signature classes are representable; this covers every
/// graph the pigeonhole self-embedding construction needs, but is a strict
/// sub-family of all graphs with n infinite-degree hubs.
class HubGraph {
public:
    struct LeafClass {
        Signature signature;  // length n, at least one bit set
        Cardinal count;       // >= 1 or infinite

        bool operator==(const LeafClass&) const = default;
    };

    /// Validates structure: n >= 1, hub pairs within 1..n, signature lengths,
    /// nonzero signatures, positive counts. Throws std::invalid_argument.
    HubGraph(int hub_count, std::vector<Edge> hub_edges, std::vector<LeafClass> classes);

    int hub_count() const { return hub_count_; }
    const std::vector<Edge>& hub_edges() const { return hub_edges_; }
    const std::vector<LeafClass>& leaf_classes() const { return classes_; }

    Cardinal hub_degree(int hub) const;

    bool operator==(const HubGraph&) const = default;

private:
    int hub_count_;
    std::vector<Edge> hub_edges_;      // normalized, sorted
    std::vector<LeafClass> classes_;   // sorted by signature
};

/// True iff every hub has infinite degree, i.e. lies in some infinite-count
/// class. The edge-cover condition holds by construction of the type.
bool is_family_member(const HubGraph& g);

/// Finite expansion: infinite counts become d, finite counts are kept.
/// Hubs take ids 1..n; leaves are numbered from n+1 class by class.
FiniteGraph hub_truncate(const HubGraph& g, int depth);

/// Pigeonhole self-embedding: picks the lexicographically least
/// infinite-count class, shifts its leaves by one (u_i -> u_{i+1}) and fixes
/// everything else, realized as hub_truncate(g, depth) -> hub_truncate(g,
/// depth+1). The image omits the class's first host leaf. Throws
/// std::invalid_argument when g is not a family member.
EmbeddingMap construct_self_embedding(const HubGraph& g, int depth);

/// Colors every edge meeting `hubs` blue and the rest red. Goodness against
/// a concrete (pattern, matching) pair is the caller's check; this only
/// produces the coloring. Requires |hubs| < n.
Coloring good_coloring_few_hubs(const FiniteGraph& f, const std::vector<int>& hubs, int n);

/// Result of the greedy blue-matching elimination loop.
struct BlueMatchingResult {
    std::vector<int> vertices;             // V, sorted; valid when ok()
    int iterations = 0;
    std::optional<std::vector<Edge>> blue_matching;  // size-n witness when the loop fails

    bool ok() const { return !blue_matching.has_value(); }
};

/// Repeatedly removes both endpoints of the least blue edge disjoint from V.
/// Succeeds within n-1 iterations with f-V blue-free, or reports the n
/// pairwise disjoint blue edges that force a blue nK2.
BlueMatchingResult blue_matching_vertex_set(const FiniteGraph& f, const Coloring& c, int n);

/// Builds nG - e together with the coloring that makes exactly one edge blue
/// in each untouched component. Blue subgraph is (n-1)K2 by construction.
/// Throws std::invalid_argument for disconnected g.
std::pair<FiniteGraph, Coloring> good_coloring_nG_minus_e(const FiniteGraph& g, int n,
                                                          int e_component, Edge e);

}  // namespace ramsey
