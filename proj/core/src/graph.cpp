#include "ramsey/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

FiniteGraph FiniteGraph::from_edges(std::vector<Edge> edges) {
    std::vector<int> verts;
    for (const auto& [u, v] : edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    return from_parts(std::move(verts), std::move(edges), false);
}

FiniteGraph FiniteGraph::from_parts(std::vector<int> vertices, std::vector<Edge> edges,
                                    bool allow_isolated) {
    FiniteGraph g;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    for (auto& e : edges) {
        if (e.first == e.second)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    for (const auto& [u, v] : edges) {
        if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
            !std::binary_search(vertices.begin(), vertices.end(), v))
            throw std::invalid_argument("edge endpoint not in vertex set: " + std::to_string(u) +
                                        "-" + std::to_string(v));
    }

    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.allow_isolated_ = allow_isolated;
    for (int v : g.vertices_) g.adjacency_[v];
    for (const auto& [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& [v, nbrs] : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs.empty() && !allow_isolated)
            throw std::invalid_argument("isolated vertex " + std::to_string(v) +
                                        " (construct with allow_isolated to permit)");
    }
    return g;
}

bool FiniteGraph::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool FiniteGraph::has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

const std::vector<int>& FiniteGraph::neighbors(int v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end())
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<std::vector<int>> FiniteGraph::connected_components() const {
    std::vector<std::vector<int>> comps;
    std::unordered_map<int, bool> seen;
    for (int root : vertices_) {
        if (seen[root]) continue;
        std::vector<int> comp, stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool FiniteGraph::is_connected() const {
    return connected_components().size() <= 1;
}

FiniteGraph path(int order) {
    if (order < 1) throw std::invalid_argument("path order must be >= 1");
    if (order == 1) return FiniteGraph::from_parts({0}, {}, true);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
    return FiniteGraph::from_edges(std::move(edges));
}

FiniteGraph complete(int order) {
    if (order < 1) throw std::invalid_argument("complete order must be >= 1");
    if (order == 1) return FiniteGraph::from_parts({0}, {}, true);
    std::vector<Edge> edges;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) edges.emplace_back(i, j);
    return FiniteGraph::from_edges(std::move(edges));
}

FiniteGraph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return FiniteGraph::from_edges(std::move(edges));
}

FiniteGraph cycle(int order) {
    if (order < 3) throw std::invalid_argument("cycle order must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < order; ++i) edges.push_back(make_edge(i, (i + 1) % order));
    return FiniteGraph::from_edges(std::move(edges));
}

FiniteGraph matching(int pairs) {
    if (pairs < 0) throw std::invalid_argument("matching size must be >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return FiniteGraph::from_edges(std::move(edges));
}

FiniteGraph delete_edge(const FiniteGraph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("delete_edge: edge not present");
    std::vector<Edge> edges;
    for (const auto& f : g.edges())
        if (f != e) edges.push_back(f);
    return FiniteGraph::from_edges(std::move(edges));
}

FiniteGraph delete_vertices(const FiniteGraph& g, const std::vector<int>& vs) {
    for (int v : vs)
        if (!g.has_vertex(v))
            throw std::invalid_argument("delete_vertices: unknown vertex " + std::to_string(v));
    std::vector<int> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    auto deleted = [&](int v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (!deleted(u) && !deleted(v)) edges.emplace_back(u, v);
    return FiniteGraph::from_edges(std::move(edges));
}

FiniteGraph disjoint_union(const std::vector<FiniteGraph>& gs) {
    std::vector<int> verts;
    std::vector<Edge> edges;
    bool any_isolated = false;
    int offset = 0;
    for (const auto& g : gs) {
        std::unordered_map<int, int> relabel;
        for (int v : g.vertices()) relabel[v] = offset++;
        for (int v : g.vertices()) verts.push_back(relabel[v]);
        for (const auto& [u, v] : g.edges()) edges.push_back(make_edge(relabel[u], relabel[v]));
        any_isolated = any_isolated || g.allows_isolated();
    }
    return FiniteGraph::from_parts(std::move(verts), std::move(edges), any_isolated);
}

PointedGraph::PointedGraph(FiniteGraph g, int bp) : graph(std::move(g)), basepoint(bp) {
    if (!graph.has_vertex(bp))
        throw std::invalid_argument("basepoint " + std::to_string(bp) + " is not a vertex");
}

}  // namespace ramsey
