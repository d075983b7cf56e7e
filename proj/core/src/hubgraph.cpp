#include "ramsey/hubgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

HubGraph::HubGraph(int hub_count, std::vector<Edge> hub_edges, std::vector<LeafClass> classes)
    : hub_count_(hub_count), hub_edges_(std::move(hub_edges)), classes_(std::move(classes)) {
    if (hub_count_ < 1) throw std::invalid_argument("hub graph needs >= 1 hub");
    for (auto& e : hub_edges_) {
        if (e.first == e.second) throw std::invalid_argument("hub self-loop");
        e = make_edge(e.first, e.second);
        if (e.first < 1 || e.second > hub_count_)
            throw std::invalid_argument("hub edge endpoint outside 1..n");
    }
    std::sort(hub_edges_.begin(), hub_edges_.end());
    hub_edges_.erase(std::unique(hub_edges_.begin(), hub_edges_.end()), hub_edges_.end());

    for (const auto& cls : classes_) {
        if (static_cast<int>(cls.signature.size()) != hub_count_)
            throw std::invalid_argument("signature length must equal hub count");
        if (std::none_of(cls.signature.begin(), cls.signature.end(), [](auto b) { return b; }))
            throw std::invalid_argument("leaf signature must have at least one 1");
        if (!cls.count.infinite && cls.count.value < 1)
            throw std::invalid_argument("leaf class count must be >= 1 or infinite");
    }
    std::sort(classes_.begin(), classes_.end(),
              [](const LeafClass& a, const LeafClass& b) { return a.signature < b.signature; });
    for (std::size_t i = 1; i < classes_.size(); ++i)
        if (classes_[i].signature == classes_[i - 1].signature)
            throw std::invalid_argument("duplicate leaf class signature");
}

Cardinal HubGraph::hub_degree(int hub) const {
    if (hub < 1 || hub > hub_count_) throw std::out_of_range("hub index out of range");
    Cardinal d = Cardinal::of(0);
    for (const auto& [u, v] : hub_edges_)
        if (u == hub || v == hub) d = d + Cardinal::of(1);
    for (const auto& cls : classes_)
        if (cls.signature[hub - 1]) d = d + cls.count;
    return d;
}

bool is_family_member(const HubGraph& g) {
    for (int i = 1; i <= g.hub_count(); ++i) {
        bool covered = false;
        for (const auto& cls : g.leaf_classes())
            if (cls.count.infinite && cls.signature[i - 1]) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

namespace {

// Leaf id layout shared by hub_truncate and the self-embedding: hubs are
// 1..n, then each class (in sorted signature order) occupies a consecutive
// block of ids sized by its realized count.
std::vector<std::pair<int, int>> class_blocks(const HubGraph& g, int depth) {
    std::vector<std::pair<int, int>> blocks;  // (first id, realized count)
    int next = g.hub_count() + 1;
    for (const auto& cls : g.leaf_classes()) {
        int count = cls.count.infinite ? depth : cls.count.value;
        blocks.emplace_back(next, count);
        next += count;
    }
    return blocks;
}

}  // namespace

FiniteGraph hub_truncate(const HubGraph& g, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    std::vector<int> verts;
    for (int i = 1; i <= g.hub_count(); ++i) verts.push_back(i);
    std::vector<Edge> edges(g.hub_edges());
    auto blocks = class_blocks(g, depth);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& cls = g.leaf_classes()[k];
        for (int i = 0; i < blocks[k].second; ++i) {
            int leaf = blocks[k].first + i;
            verts.push_back(leaf);
            for (int hub = 1; hub <= g.hub_count(); ++hub)
                if (cls.signature[hub - 1]) edges.push_back(make_edge(hub, leaf));
        }
    }
    // A hub with only hub-hub edges could end up isolated-free anyway; hubs
    // of non-members may still be leaf-free and edge-free, so allow isolated
    // vertices only when that actually happens.
    bool isolated = false;
    for (int i = 1; i <= g.hub_count(); ++i) {
        bool touched = false;
        for (const auto& [u, v] : edges) touched = touched || u == i || v == i;
        isolated = isolated || !touched;
    }
    return FiniteGraph::from_parts(std::move(verts), std::move(edges), isolated);
}

EmbeddingMap construct_self_embedding(const HubGraph& g, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (!is_family_member(g))
        throw std::invalid_argument("no infinite leaf class: not a family member");

    std::size_t target = 0;
    bool found = false;
    for (std::size_t k = 0; k < g.leaf_classes().size(); ++k)
        if (g.leaf_classes()[k].count.infinite) {
            target = k;
            found = true;
            break;  // classes are sorted, so this is the lexicographic least
        }
    if (!found) throw std::invalid_argument("no infinite leaf class");

    auto pat_blocks = class_blocks(g, depth);
    auto host_blocks = class_blocks(g, depth + 1);

    EmbeddingMap map;
    for (int i = 1; i <= g.hub_count(); ++i) map.assignment[i] = i;
    for (std::size_t k = 0; k < pat_blocks.size(); ++k) {
        int shift = (k == target) ? 1 : 0;
        for (int i = 0; i < pat_blocks[k].second; ++i)
            map.assignment[pat_blocks[k].first + i] = host_blocks[k].first + i + shift;
    }

    if (!validate_embedding(hub_truncate(g, depth), hub_truncate(g, depth + 1), map))
        throw std::logic_error("constructed hub self-embedding failed validation");
    return map;
}

Coloring good_coloring_few_hubs(const FiniteGraph& f, const std::vector<int>& hubs, int n) {
    if (static_cast<int>(hubs.size()) >= n)
        throw std::invalid_argument("need |hubs| < n");
    for (int v : hubs)
        if (!f.has_vertex(v))
            throw std::invalid_argument("hub vertex " + std::to_string(v) + " not in graph");
    Coloring c;
    auto is_hub = [&](int v) { return std::find(hubs.begin(), hubs.end(), v) != hubs.end(); };
    for (const auto& e : f.edges())
        c.assignment[e] = (is_hub(e.first) || is_hub(e.second)) ? Color::Blue : Color::Red;
    return c;
}

BlueMatchingResult blue_matching_vertex_set(const FiniteGraph& f, const Coloring& c, int n) {
    if (!c.total_on(f)) throw std::invalid_argument("coloring is not total on f");
    if (n < 1) throw std::invalid_argument("n must be >= 1");

    BlueMatchingResult result;
    std::vector<int> used;
    std::vector<Edge> chosen;
    while (true) {
        std::optional<Edge> next;
        for (const auto& [e, col] : c.assignment) {
            if (col != Color::Blue) continue;
            bool disjoint = std::find(used.begin(), used.end(), e.first) == used.end() &&
                            std::find(used.begin(), used.end(), e.second) == used.end();
            if (disjoint) {
                next = e;  // assignment is ordered, so this is the least blue edge
                break;
            }
        }
        if (!next) break;
        if (static_cast<int>(chosen.size()) == n - 1) {
            chosen.push_back(*next);
            result.blue_matching = std::move(chosen);
            return result;
        }
        chosen.push_back(*next);
        used.push_back(next->first);
        used.push_back(next->second);
    }
    std::sort(used.begin(), used.end());
    result.vertices = std::move(used);
    result.iterations = static_cast<int>(chosen.size());
    return result;
}

std::pair<FiniteGraph, Coloring> good_coloring_nG_minus_e(const FiniteGraph& g, int n,
                                                          int e_component, Edge e) {
    if (!g.is_connected() || g.empty())
        throw std::invalid_argument("component template must be connected and nonempty");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (e_component < 0 || e_component >= n)
        throw std::invalid_argument("component index out of range");
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("e is not an edge of the component template");

    // disjoint_union relabels copy j's sorted vertices onto a consecutive
    // block, so copy-local edges are recoverable by offset.
    const auto& vs = g.vertices();
    auto local_index = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    const int block = static_cast<int>(vs.size());
    auto in_copy = [&](Edge f, int j) {
        return make_edge(local_index(f.first) + j * block, local_index(f.second) + j * block);
    };

    FiniteGraph whole = disjoint_union(std::vector<FiniteGraph>(n, g));
    FiniteGraph result = delete_edge(whole, in_copy(e, e_component));

    Coloring coloring;
    std::vector<Edge> blue;
    for (int j = 0; j < n; ++j) {
        if (j == e_component) continue;
        blue.push_back(in_copy(g.edges().front(), j));  // least edge of copy j
    }
    for (const auto& f : result.edges()) {
        bool is_blue = std::find(blue.begin(), blue.end(), f) != blue.end();
        coloring.assignment[f] = is_blue ? Color::Blue : Color::Red;
    }

    // Sanity: the blue edges form (n-1) pairwise disjoint pairs.
    for (std::size_t i = 0; i < blue.size(); ++i)
        for (std::size_t j = i + 1; j < blue.size(); ++j)
            if (blue[i].first == blue[j].first || blue[i].second == blue[j].second ||
                blue[i].first == blue[j].second || blue[i].second == blue[j].first)
                throw std::logic_error("blue edges are not a matching");
    return {std::move(result), std::move(coloring)};
}

}  // namespace ramsey
