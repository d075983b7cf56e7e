#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ramsey {

/// Undirected edge, stored with endpoints in ascending order.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Finite simple undirected graph on integer-labeled vertices.
///
/// Immutable value type. By convention graphs carry no isolated vertices;
/// constructions that need them transiently (single-vertex patterns, vertex
/// deletions in progress) must pass allow_isolated explicitly.
class FiniteGraph {
public:
    FiniteGraph() = default;

    /// Graph whose vertex set is exactly the endpoints of `edges`.
    static FiniteGraph from_edges(std::vector<Edge> edges);

    /// Graph with an explicit vertex set. Throws std::invalid_argument on
    /// self-loops, endpoints outside the vertex set, or isolated vertices
    /// when allow_isolated is false. Duplicate edges are merged.
    static FiniteGraph from_parts(std::vector<int> vertices, std::vector<Edge> edges,
                                  bool allow_isolated = false);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }
    bool allows_isolated() const { return allow_isolated_; }

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;

    /// Sorted neighbor list. Throws std::out_of_range for unknown vertices.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Components as sorted vertex lists, ordered by least vertex.
    std::vector<std::vector<int>> connected_components() const;
    bool is_connected() const;

    bool operator==(const FiniteGraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<int> vertices_;  // sorted, unique
    std::vector<Edge> edges_;    // normalized, sorted, unique
    std::unordered_map<int, std::vector<int>> adjacency_;
    bool allow_isolated_ = false;
};

// Small named graphs used throughout. path(n) is the path on n vertices
// 0..n-1; star(k) is K_{1,k} with center 0; matching(n) is nK2.
FiniteGraph path(int order);
FiniteGraph complete(int order);
FiniteGraph star(int leaves);
FiniteGraph cycle(int order);
FiniteGraph matching(int pairs);

/// Removes an edge; endpoints left isolated are dropped.
/// Throws std::invalid_argument if the edge is absent.
FiniteGraph delete_edge(const FiniteGraph& g, Edge e);

/// Removes vertices with their incident edges; newly isolated vertices are
/// dropped as well. Throws std::invalid_argument for unknown vertices.
FiniteGraph delete_vertices(const FiniteGraph& g, const std::vector<int>& vs);

/// Disjoint union with consecutive relabeling starting from 0.
FiniteGraph disjoint_union(const std::vector<FiniteGraph>& gs);

/// Graph with a distinguished basepoint vertex.
struct PointedGraph {
    FiniteGraph graph;
    int basepoint = 0;

    PointedGraph() = default;
    /// Throws std::invalid_argument if the basepoint is not a vertex.
    PointedGraph(FiniteGraph g, int basepoint);
};

}  // namespace ramsey
