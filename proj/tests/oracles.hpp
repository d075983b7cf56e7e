#pragma once

// Test-only brute-force oracles, kept independent of the search strategies
// they check: embeddings by enumeration of all injective maps, arrowing by
// enumeration of all 2^|E| colorings.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/graph.hpp"

namespace oracle {

using ramsey::Coloring;
using ramsey::Color;
using ramsey::Edge;
using ramsey::FiniteGraph;
using ramsey::PointedGraph;

inline bool map_preserves_edges(const FiniteGraph& pattern, const FiniteGraph& host,
                                const std::vector<int>& pat_verts,
                                const std::vector<int>& image) {
    for (std::size_t i = 0; i < pat_verts.size(); ++i)
        for (std::size_t j = i + 1; j < pat_verts.size(); ++j)
            if (pattern.has_edge(pat_verts[i], pat_verts[j]) &&
                !host.has_edge(image[i], image[j]))
                return false;
    return true;
}

inline bool extend_all_maps(const FiniteGraph& pattern, const FiniteGraph& host,
                            const std::vector<int>& pat_verts, std::vector<int>& image,
                            std::vector<bool>& used,
                            const std::optional<std::pair<int, int>>& pinned) {
    const std::size_t i = image.size();
    if (i == pat_verts.size())
        return map_preserves_edges(pattern, host, pat_verts, image);
    const auto& hv = host.vertices();
    for (std::size_t k = 0; k < hv.size(); ++k) {
        if (used[k]) continue;
        if (pinned && pat_verts[i] == pinned->first && hv[k] != pinned->second) continue;
        if (pinned && pat_verts[i] != pinned->first && hv[k] == pinned->second) continue;
        used[k] = true;
        image.push_back(hv[k]);
        if (extend_all_maps(pattern, host, pat_verts, image, used, pinned)) return true;
        image.pop_back();
        used[k] = false;
    }
    return false;
}

/// Exhaustive check over every injective vertex map.
inline bool embedding_exists(const FiniteGraph& pattern, const FiniteGraph& host) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    std::vector<int> image;
    std::vector<bool> used(host.vertex_count(), false);
    return extend_all_maps(pattern, host, pattern.vertices(), image, used, std::nullopt);
}

inline bool pointed_embedding_exists(const PointedGraph& pattern, const PointedGraph& host) {
    if (pattern.graph.vertex_count() > host.graph.vertex_count()) return false;
    std::vector<int> image;
    std::vector<bool> used(host.graph.vertex_count(), false);
    return extend_all_maps(pattern.graph, host.graph, pattern.graph.vertices(), image, used,
                           std::pair{pattern.basepoint, host.basepoint});
}

/// Number of pointed embeddings of the induced prefix pattern_order[0..k]
/// into the host, counted by full enumeration.
inline long count_pointed_prefix_embeddings(const FiniteGraph& pattern,
                                            const std::vector<int>& pattern_order, int level,
                                            const PointedGraph& host) {
    std::vector<int> prefix(pattern_order.begin(), pattern_order.begin() + level + 1);
    long count = 0;
    std::vector<int> image;
    std::vector<bool> used(host.graph.vertex_count(), false);
    const auto& hv = host.graph.vertices();

    std::function<void()> rec = [&]() {
        const std::size_t i = image.size();
        if (i == prefix.size()) {
            count += map_preserves_edges(pattern, host.graph, prefix, image) ? 1 : 0;
            return;
        }
        for (std::size_t k = 0; k < hv.size(); ++k) {
            if (used[k]) continue;
            if (prefix[i] == pattern_order[0] && hv[k] != host.basepoint) continue;
            if (prefix[i] != pattern_order[0] && hv[k] == host.basepoint) continue;
            used[k] = true;
            image.push_back(hv[k]);
            rec();
            image.pop_back();
            used[k] = false;
        }
    };
    rec();
    return count;
}

/// Exhaustive arrowing decision over all 2^|E| colorings.
inline bool arrows_exhaustive(const FiniteGraph& f, const FiniteGraph& g, const FiniteGraph& h) {
    const auto& edges = f.edges();
    const std::size_t m = edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Edge> red, blue;
        for (std::size_t i = 0; i < m; ++i)
            ((mask >> i) & 1 ? blue : red).push_back(edges[i]);
        bool red_g = ramsey::contains_subgraph(g, FiniteGraph::from_edges(red));
        bool blue_h = ramsey::contains_subgraph(h, FiniteGraph::from_edges(blue));
        if (!red_g && !blue_h) return false;  // good coloring found
    }
    return true;
}

/// Pointed exhaustive arrowing: red side must contain g basepoint-to-basepoint.
inline bool arrows_pointed_exhaustive(const PointedGraph& f, const PointedGraph& g,
                                      const FiniteGraph& h) {
    const auto& edges = f.graph.edges();
    const std::size_t m = edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Edge> red, blue;
        for (std::size_t i = 0; i < m; ++i)
            ((mask >> i) & 1 ? blue : red).push_back(edges[i]);
        std::vector<int> red_verts{f.basepoint};
        for (const auto& [u, v] : red) {
            red_verts.push_back(u);
            red_verts.push_back(v);
        }
        PointedGraph red_sub(FiniteGraph::from_parts(red_verts, red, true), f.basepoint);
        bool red_g = pointed_embedding_exists(g, red_sub);
        bool blue_h = ramsey::contains_subgraph(h, FiniteGraph::from_edges(blue));
        if (!red_g && !blue_h) return false;
    }
    return true;
}

}  // namespace oracle
