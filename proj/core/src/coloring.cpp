#include "ramsey/coloring.hpp"

#include <stdexcept>

namespace ramsey {

Coloring Coloring::from_edge_sets(const std::vector<Edge>& red, const std::vector<Edge>& blue) {
    Coloring c;
    for (const auto& [u, v] : red) c.assignment[make_edge(u, v)] = Color::Red;
    for (const auto& [u, v] : blue) {
        auto [it, inserted] = c.assignment.emplace(make_edge(u, v), Color::Blue);
        if (!inserted)
            throw std::invalid_argument("edge colored both red and blue");
    }
    return c;
}

bool Coloring::total_on(const FiniteGraph& g) const {
    if (assignment.size() != g.edge_count()) return false;
    for (const auto& [e, c] : assignment)
        if (!g.has_edge(e.first, e.second)) return false;
    return true;
}

std::vector<Edge> Coloring::edges_of(Color c) const {
    std::vector<Edge> out;
    for (const auto& [e, col] : assignment)
        if (col == c) out.push_back(e);
    return out;
}

FiniteGraph Coloring::subgraph(Color c) const {
    return FiniteGraph::from_edges(edges_of(c));
}

}  // namespace ramsey
