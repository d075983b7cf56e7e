#include "ramsey/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace ramsey {

namespace {

// Iterated refinement: a vertex's color is repeatedly replaced by
// (color, sorted multiset of neighbor colors) until the partition is stable.
// Colors are reindexed by sorted key order each round, so the final coloring
// is isomorphism-invariant.
std::vector<int> refine(const std::vector<std::vector<int>>& adj, std::vector<int> colors) {
    const int n = static_cast<int>(adj.size());
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{colors[v]};
            std::vector<int> nbr;
            for (int w : adj[v]) nbr.push_back(colors[w]);
            std::sort(nbr.begin(), nbr.end());
            key.insert(key.end(), nbr.begin(), nbr.end());
            keys[v] = {std::move(key), v};
        }
        std::vector<std::vector<int>> sorted_keys;
        for (const auto& [key, v] : keys) sorted_keys.push_back(key);
        std::sort(sorted_keys.begin(), sorted_keys.end());
        sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()), sorted_keys.end());

        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto it = std::lower_bound(sorted_keys.begin(), sorted_keys.end(), keys[v].first);
            next[v] = static_cast<int>(it - sorted_keys.begin());
        }
        if (next == colors) return colors;
        colors = std::move(next);
    }
}

struct MinOrderSearch {
    const std::vector<std::vector<bool>>& adjm;
    std::vector<std::vector<int>> cells;  // refinement cells in color order
    int n;

    std::vector<uint8_t> best;
    std::vector<uint8_t> current;
    std::vector<int> perm;
    std::vector<bool> used;
    bool have_best = false;

    // status: 0 while current == best prefix, -1 once strictly smaller. best
    // may shrink while siblings are in flight, so the leaf re-compares; the
    // prefix prune stays sound because best only ever gets smaller.
    void rec(int pos, int cell_idx, int cell_used, int status) {
        if (pos == n) {
            if (!have_best || current < best) best = current;
            have_best = true;
            return;
        }
        if (cell_used == static_cast<int>(cells[cell_idx].size())) {
            rec(pos, cell_idx + 1, 0, status);
            return;
        }
        for (int v : cells[cell_idx]) {
            if (used[v]) continue;
            int st = status;
            bool prune = false;
            const std::size_t base = current.size();
            for (int j = 0; j < pos; ++j) {
                uint8_t bit = adjm[v][perm[j]] ? 1 : 0;
                current.push_back(bit);
                if (st == 0 && have_best) {
                    uint8_t b = best[base + static_cast<std::size_t>(j)];
                    if (bit > b) {
                        prune = true;
                        break;
                    }
                    if (bit < b) st = -1;
                }
            }
            if (!prune) {
                perm[pos] = v;
                used[v] = true;
                rec(pos + 1, cell_idx, cell_used + 1, st);
                used[v] = false;
            }
            current.resize(base);
        }
    }
};

// Canonical string of one connected piece (or any small graph on the given
// vertex list). basepoint, when set, is forced into a leading singleton cell.
std::string canon_block(const FiniteGraph& g, const std::vector<int>& verts,
                        std::optional<int> basepoint) {
    const int n = static_cast<int>(verts.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[verts[i]] = i;

    std::vector<std::vector<int>> adj(n);
    std::vector<std::vector<bool>> adjm(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int w : g.neighbors(verts[i])) {
            auto it = index.find(w);
            if (it == index.end()) continue;
            adj[i].push_back(it->second);
            adjm[i][it->second] = true;
        }

    std::vector<int> init(n, 1);
    if (basepoint) init[index.at(*basepoint)] = 0;
    auto colors = refine(adj, std::move(init));

    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[colors[v]].push_back(v);
    MinOrderSearch search{adjm, {}, n, {}, {}, std::vector<int>(n), std::vector<bool>(n, false),
                          false};
    for (auto& [c, cell] : by_color) search.cells.push_back(cell);
    search.rec(0, 0, 0, 0);

    std::string out = std::to_string(n) + ":";
    if (basepoint) out = "p" + out;
    static const char* hex = "0123456789abcdef";
    int nibble = 0, filled = 0;
    for (uint8_t b : search.best) {
        nibble = (nibble << 1) | b;
        if (++filled == 4) {
            out += hex[nibble];
            nibble = filled = 0;
        }
    }
    if (filled) out += hex[nibble << (4 - filled)];
    return out;
}

}  // namespace

std::string canonical_form(const FiniteGraph& g) {
    std::vector<std::string> parts;
    for (const auto& comp : g.connected_components())
        parts.push_back(canon_block(g, comp, std::nullopt));
    std::sort(parts.begin(), parts.end());
    std::string out = "G";
    for (const auto& p : parts) out += "|" + p;
    return out;
}

std::string canonical_form(const PointedGraph& pg) {
    std::string bp_part;
    std::vector<std::string> rest;
    for (const auto& comp : pg.graph.connected_components()) {
        if (std::binary_search(comp.begin(), comp.end(), pg.basepoint))
            bp_part = canon_block(pg.graph, comp, pg.basepoint);
        else
            rest.push_back(canon_block(pg.graph, comp, std::nullopt));
    }
    std::sort(rest.begin(), rest.end());
    std::string out = "P|" + bp_part;
    for (const auto& p : rest) out += "|" + p;
    return out;
}

std::vector<FiniteGraph> enumerate_nonisomorphic_graphs(int max_vertices, int max_edges) {
    if (max_vertices < 1 || max_edges < 0)
        throw std::invalid_argument("enumeration bounds must be positive");

    std::vector<FiniteGraph> out{FiniteGraph{}};
    std::vector<FiniteGraph> level{};
    if (max_edges >= 1 && max_vertices >= 2) level.push_back(matching(1));

    for (int m = 1; m <= max_edges && !level.empty(); ++m) {
        std::map<std::string, FiniteGraph> next;
        for (const auto& g : level) out.push_back(g);

        if (m == max_edges) break;
        for (const auto& g : level) {
            const auto& vs = g.vertices();
            int fresh = vs.empty() ? 0 : vs.back() + 1;
            std::vector<FiniteGraph> grown;
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (!g.has_edge(vs[i], vs[j])) {
                        auto edges = g.edges();
                        edges.push_back(make_edge(vs[i], vs[j]));
                        grown.push_back(FiniteGraph::from_edges(std::move(edges)));
                    }
            if (static_cast<int>(vs.size()) + 1 <= max_vertices)
                for (int v : vs) {
                    auto edges = g.edges();
                    edges.push_back(make_edge(v, fresh));
                    grown.push_back(FiniteGraph::from_edges(std::move(edges)));
                }
            if (static_cast<int>(vs.size()) + 2 <= max_vertices) {
                auto edges = g.edges();
                edges.push_back(make_edge(fresh, fresh + 1));
                grown.push_back(FiniteGraph::from_edges(std::move(edges)));
            }
            for (auto& h : grown) next.emplace(canonical_form(h), std::move(h));
        }
        level.clear();
        for (auto& [c, h] : next) level.push_back(std::move(h));
    }
    return out;
}

}  // namespace ramsey
