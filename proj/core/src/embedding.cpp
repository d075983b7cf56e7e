#include "ramsey/embedding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ramsey {

namespace {

// Pattern vertex order: seed with the basepoint (pointed) or a max-degree
// vertex, then repeatedly take the vertex with most already-ordered
// neighbors. Keeps partial maps tightly constrained.
std::vector<int> pattern_order(const FiniteGraph& pattern, std::optional<int> seed) {
    std::vector<int> order;
    std::set<int> placed;
    auto place = [&](int v) {
        order.push_back(v);
        placed.insert(v);
    };
    if (seed) place(*seed);

    while (order.size() < pattern.vertex_count()) {
        int best = -1;
        int best_links = -1, best_degree = -1;
        for (int v : pattern.vertices()) {
            if (placed.count(v)) continue;
            int links = 0;
            for (int w : pattern.neighbors(v)) links += placed.count(w) ? 1 : 0;
            int degree = pattern.degree(v);
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        place(best);
    }
    return order;
}

bool extend(const FiniteGraph& pattern, const FiniteGraph& host, const std::vector<int>& order,
            std::size_t pos, std::map<int, int>& assignment, std::set<int>& used,
            const std::optional<std::pair<int, int>>& pinned) {
    if (pos == order.size()) return true;
    int p = order[pos];

    if (pinned && pinned->first == p) {
        int h = pinned->second;
        if (used.count(h) || host.degree(h) < pattern.degree(p)) return false;
        for (int q : pattern.neighbors(p)) {
            auto it = assignment.find(q);
            if (it != assignment.end() && !host.has_edge(it->second, h)) return false;
        }
        assignment[p] = h;
        used.insert(h);
        if (extend(pattern, host, order, pos + 1, assignment, used, pinned)) return true;
        assignment.erase(p);
        used.erase(h);
        return false;
    }

    for (int h : host.vertices()) {
        if (used.count(h)) continue;
        if (host.degree(h) < pattern.degree(p)) continue;
        bool ok = true;
        for (int q : pattern.neighbors(p)) {
            auto it = assignment.find(q);
            if (it != assignment.end() && !host.has_edge(it->second, h)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        assignment[p] = h;
        used.insert(h);
        if (extend(pattern, host, order, pos + 1, assignment, used, pinned)) return true;
        assignment.erase(p);
        used.erase(h);
    }
    return false;
}

std::optional<EmbeddingMap> search_embedding(const FiniteGraph& pattern, const FiniteGraph& host,
                                             std::optional<std::pair<int, int>> pinned) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.empty()) return EmbeddingMap{};
    auto order = pattern_order(pattern, pinned ? std::optional<int>(pinned->first) : std::nullopt);
    std::map<int, int> assignment;
    std::set<int> used;
    if (!extend(pattern, host, order, 0, assignment, used, pinned)) return std::nullopt;
    return EmbeddingMap{std::move(assignment), pinned.has_value()};
}

}  // namespace

std::optional<EmbeddingMap> find_embedding(const FiniteGraph& pattern, const FiniteGraph& host) {
    return search_embedding(pattern, host, std::nullopt);
}

std::optional<EmbeddingMap> find_pointed_embedding(const PointedGraph& pattern,
                                                   const PointedGraph& host) {
    return search_embedding(pattern.graph, host.graph,
                            std::pair{pattern.basepoint, host.basepoint});
}

bool validate_embedding(const FiniteGraph& pattern, const FiniteGraph& host,
                        const EmbeddingMap& map) {
    if (map.assignment.size() != pattern.vertex_count()) return false;
    std::set<int> image;
    for (const auto& [p, h] : map.assignment) {
        if (!pattern.has_vertex(p) || !host.has_vertex(h)) return false;
        if (!image.insert(h).second) return false;  // not injective
    }
    for (const auto& [u, v] : pattern.edges())
        if (!host.has_edge(map.assignment.at(u), map.assignment.at(v))) return false;
    return true;
}

bool validate_pointed_embedding(const PointedGraph& pattern, const PointedGraph& host,
                                const EmbeddingMap& map) {
    if (!validate_embedding(pattern.graph, host.graph, map)) return false;
    auto it = map.assignment.find(pattern.basepoint);
    return it != map.assignment.end() && it->second == host.basepoint;
}

EmbeddingMap compose(const EmbeddingMap& first, const EmbeddingMap& second) {
    EmbeddingMap out;
    out.pointed = first.pointed && second.pointed;
    for (const auto& [p, mid] : first.assignment) {
        auto it = second.assignment.find(mid);
        if (it == second.assignment.end())
            throw std::invalid_argument("compose: intermediate vertex not in second map");
        out.assignment[p] = it->second;
    }
    return out;
}

}  // namespace ramsey
