#include "ramsey/konig.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "ramsey/canonical.hpp"
#include "ramsey/hubgraph.hpp"

namespace ramsey {

std::vector<int> bfs_enumeration(const PointedGraph& g) {
    std::map<int, int> dist;
    std::deque<int> queue{g.basepoint};
    dist[g.basepoint] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.graph.neighbors(v))
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    if (dist.size() != g.graph.vertex_count())
        throw std::invalid_argument("bfs_enumeration requires a connected graph");

    std::vector<int> order(g.graph.vertices());
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist.at(a) < dist.at(b); });
    // ids ascend within a distance class because vertices() is sorted and
    // the sort is stable
    return order;
}

std::vector<std::size_t> LevelSets::sizes() const {
    std::vector<std::size_t> out;
    for (const auto& level : levels) out.push_back(level.size());
    return out;
}

LevelSets build_level_sets(const PointedGraph& pattern, const PointedGraph& host, int max_level) {
    LevelSets sets;
    sets.pattern_order = bfs_enumeration(pattern);
    sets.pattern = pattern;
    sets.host = host;
    if (max_level < 0 || max_level >= static_cast<int>(sets.pattern_order.size()))
        throw std::invalid_argument("max_level must lie in [0, |V(pattern)|-1]");

    sets.levels.emplace_back();
    sets.levels[0].push_back({{host.basepoint}, -1});

    for (int level = 1; level <= max_level; ++level) {
        const int v_new = sets.pattern_order[level];
        // Edges of the induced prefix incident to the new vertex.
        std::vector<int> earlier_neighbors;
        for (int j = 0; j < level; ++j)
            if (pattern.graph.has_edge(sets.pattern_order[j], v_new))
                earlier_neighbors.push_back(j);

        std::vector<LevelSets::Entry> next;
        const auto& prev = sets.levels.back();
        for (std::size_t pi = 0; pi < prev.size(); ++pi) {
            const auto& image = prev[pi].image;
            for (int w : host.graph.vertices()) {
                if (std::find(image.begin(), image.end(), w) != image.end()) continue;
                bool ok = true;
                for (int j : earlier_neighbors)
                    if (!host.graph.has_edge(image[j], w)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                auto extended = image;
                extended.push_back(w);
                next.push_back({std::move(extended), static_cast<int>(pi)});
            }
        }
        // Parents are visited in lexicographic order and candidates ascend,
        // so `next` is already sorted by image tuple.
        sets.levels.push_back(std::move(next));
        if (sets.levels.back().empty() && level < max_level) {
            // All later levels stay empty; materialize them for the caller.
            for (int rest = level + 1; rest <= max_level; ++rest) sets.levels.emplace_back();
            break;
        }
    }
    return sets;
}

std::optional<EmbeddingMap> stitch_embedding(const LevelSets& levels) {
    if (levels.levels.size() != levels.pattern_order.size())
        throw std::invalid_argument("levels must be built to the pattern's full size");
    const auto& top = levels.levels.back();
    if (top.empty()) return std::nullopt;
    EmbeddingMap map;
    map.pointed = true;
    for (std::size_t i = 0; i < levels.pattern_order.size(); ++i)
        map.assignment[levels.pattern_order[i]] = top.front().image[i];
    return map;
}

namespace {

bool locally_finite(const SymbolicGraph& g) {
    using F = SymbolicGraph::Family;
    switch (g.family()) {
        case F::Star:
        case F::CompleteInfinite:
        case F::Hub:
            return false;
        case F::Union:
            return locally_finite(g.inner());
        default:
            return true;
    }
}

FiniteGraph truncate_any(const SymbolicGraph& g, int depth) {
    if (g.family() == SymbolicGraph::Family::Hub) return hub_truncate(g.hub_graph(), depth);
    return truncate(g, depth);
}

}  // namespace

std::optional<EmbeddingMap> ray_prefix_search(const SymbolicGraph& host, int prefix_len,
                                              int depth) {
    if (prefix_len < 1 || depth < 1)
        throw std::invalid_argument("prefix length and depth must be >= 1");
    if (!locally_finite(host))
        throw std::invalid_argument("ray prefix search requires a locally finite host");

    PointedGraph pattern(path(prefix_len + 1), 0);
    PointedGraph rooted(truncate(host, depth), natural_root(host));
    auto levels = build_level_sets(pattern, rooted, prefix_len);
    return stitch_embedding(levels);
}

std::optional<ArrowingTruncation> finite_arrowing_subgraph(const SymbolicGraph& f,
                                                           const FiniteGraph& g,
                                                           const FiniteGraph& h, int depth_cap) {
    if (depth_cap < 1) throw std::invalid_argument("depth cap must be >= 1");
    for (int d = 1; d <= depth_cap; ++d) {
        FiniteGraph fd = truncate_any(f, d);
        if (arrows(fd, g, h).arrows) return ArrowingTruncation{d, std::move(fd)};
    }
    return std::nullopt;
}

std::vector<PointedGraph> enumerate_connected_pointed_subgraphs(const PointedGraph& host,
                                                                std::size_t cap) {
    std::vector<PointedGraph> out;
    std::set<std::string> seen;

    PointedGraph trivial(FiniteGraph::from_parts({host.basepoint}, {}, true), host.basepoint);
    seen.insert(canonical_form(trivial));
    out.push_back(trivial);

    // Grow edge sets breadth-first; every connected pointed subgraph arises
    // by adding one incident edge to a smaller one.
    std::vector<std::vector<Edge>> frontier{{}};
    while (!frontier.empty() && out.size() < cap) {
        std::map<std::string, std::vector<Edge>> next;
        for (const auto& edges : frontier) {
            std::set<int> verts{host.basepoint};
            for (const auto& [u, v] : edges) {
                verts.insert(u);
                verts.insert(v);
            }
            for (const auto& e : host.graph.edges()) {
                if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
                if (!verts.count(e.first) && !verts.count(e.second)) continue;
                auto grown = edges;
                grown.push_back(e);
                std::sort(grown.begin(), grown.end());
                std::vector<int> vs{host.basepoint};
                for (const auto& [u, v] : grown) {
                    vs.push_back(u);
                    vs.push_back(v);
                }
                PointedGraph sub(FiniteGraph::from_parts(vs, grown, true), host.basepoint);
                next.emplace(canonical_form(sub), std::move(grown));
            }
        }
        frontier.clear();
        for (auto& [canon, edges] : next) {
            if (seen.count(canon)) continue;
            if (out.size() >= cap) return out;
            seen.insert(canon);
            std::vector<int> vs{host.basepoint};
            for (const auto& [u, v] : edges) {
                vs.push_back(u);
                vs.push_back(v);
            }
            out.push_back(PointedGraph(FiniteGraph::from_parts(vs, edges, true), host.basepoint));
            frontier.push_back(edges);
        }
    }
    return out;
}

namespace {

TransferReport run_transfer(const SymbolicGraph& f, const std::vector<PointedGraph>& hatg_list,
                            const std::vector<PointedGraph>& conclusion_list,
                            const FiniteGraph& h, int depth, int slack, int cap,
                            bool cap_reached, std::vector<std::string> warnings) {
    TransferReport report;
    report.depth = depth;
    report.slack = slack;
    report.cap = cap;
    report.cap_reached = cap_reached;
    report.warnings = std::move(warnings);

    // H must fit inside the star spanned by F's root for the transfer
    // conclusion to be attainable; surfaced as a warning, not enforced.
    Cardinal root_deg = root_degree(f);
    bool h_fits = !h.empty();
    if (!h.edges().empty()) {
        auto [u, v] = h.edges().front();
        auto all_at = [&](int c) {
            return std::all_of(h.edges().begin(), h.edges().end(),
                               [&](const Edge& e) { return e.first == c || e.second == c; });
        };
        h_fits = all_at(u) || all_at(v);
    }
    if (h_fits && !root_deg.infinite && static_cast<int>(h.edge_count()) > root_deg.value)
        h_fits = false;
    if (!h_fits)
        report.warnings.push_back(
            "H does not embed into the star at F's root; the pointed arrowing "
            "conclusion may be unattainable");

    PointedGraph f_rooted(truncate_any(f, depth + slack), natural_root(f));
    for (const auto& hatg : hatg_list) {
        bool ok = hatg.graph.edge_count() == 0
                      ? true  // a lone basepoint is a red pointed subgraph of anything
                      : arrows_pointed(f_rooted, hatg, h).arrows;
        report.all_hypothesis_pass = report.all_hypothesis_pass && ok;
        report.hypothesis.push_back({hatg.graph, hatg.basepoint, ok});
    }
    for (const auto& gd : conclusion_list) {
        bool ok = arrows_pointed(f_rooted, gd, h).arrows;
        report.all_conclusion_pass = report.all_conclusion_pass && ok;
        report.conclusion.push_back({gd.graph, gd.basepoint, ok});
    }
    return report;
}

}  // namespace

TransferReport bounded_pointed_arrowing_transfer(const SymbolicGraph& f, const SymbolicGraph& g,
                                                 const FiniteGraph& h, int depth, int slack,
                                                 int subgraph_cap) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    std::vector<std::string> warnings;
    if (!locally_finite(f))
        warnings.push_back("F is not locally finite; the transfer theorem's hypotheses fail "
                           "and this report is a bounded check only");
    if (!locally_finite(g))
        warnings.push_back("G is not locally finite; the transfer theorem's hypotheses fail "
                           "and this report is a bounded check only");

    PointedGraph g_rooted(truncate_any(g, depth), natural_root(g));
    if (!g_rooted.graph.is_connected())
        throw std::invalid_argument("transfer requires a connected G");
    auto hatg = enumerate_connected_pointed_subgraphs(g_rooted,
                                                      static_cast<std::size_t>(subgraph_cap));
    bool cap_reached = hatg.size() >= static_cast<std::size_t>(subgraph_cap);

    std::vector<PointedGraph> conclusion;
    for (int d = 1; d <= depth; ++d)
        conclusion.push_back(PointedGraph(truncate_any(g, d), natural_root(g)));

    return run_transfer(f, hatg, conclusion, h, depth, slack, subgraph_cap, cap_reached,
                        std::move(warnings));
}

TransferReport bounded_pointed_arrowing_transfer(const SymbolicGraph& f, const PointedGraph& g,
                                                 const FiniteGraph& h, int depth, int slack,
                                                 int subgraph_cap) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    std::vector<std::string> warnings;
    if (!locally_finite(f))
        warnings.push_back("F is not locally finite; the transfer theorem's hypotheses fail "
                           "and this report is a bounded check only");
    if (!g.graph.is_connected())
        throw std::invalid_argument("transfer requires a connected G");
    auto hatg = enumerate_connected_pointed_subgraphs(g,
                                                      static_cast<std::size_t>(subgraph_cap));
    bool cap_reached = hatg.size() >= static_cast<std::size_t>(subgraph_cap);
    return run_transfer(f, hatg, {g}, h, depth, slack, subgraph_cap, cap_reached,
                        std::move(warnings));
}

}  // namespace ramsey
