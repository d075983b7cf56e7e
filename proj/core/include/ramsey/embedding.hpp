#pragma once

#include <map>
#include <optional>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Injective vertex map witnessing (non-induced) subgraph containment.
struct EmbeddingMap {
    std::map<int, int> assignment;  // pattern vertex -> host vertex
    bool pointed = false;

    int operator()(int pattern_vertex) const { return assignment.at(pattern_vertex); }
};

/// Backtracking subgraph-isomorphism search. Pattern vertices are ordered
/// connectivity-first; host candidates are tried in ascending id with a
/// degree-compatibility prune, so the returned witness is deterministic.
std::optional<EmbeddingMap> find_embedding(const FiniteGraph& pattern, const FiniteGraph& host);

/// As find_embedding, additionally forcing pattern basepoint -> host basepoint.
std::optional<EmbeddingMap> find_pointed_embedding(const PointedGraph& pattern,
                                                   const PointedGraph& host);

/// Independent validity check: totality, injectivity, edge preservation,
/// and the basepoint condition when both basepoints are supplied.
bool validate_embedding(const FiniteGraph& pattern, const FiniteGraph& host,
                        const EmbeddingMap& map);
bool validate_pointed_embedding(const PointedGraph& pattern, const PointedGraph& host,
                                const EmbeddingMap& map);

/// second . first, defined on first's domain.
EmbeddingMap compose(const EmbeddingMap& first, const EmbeddingMap& second);

inline bool contains_subgraph(const FiniteGraph& pattern, const FiniteGraph& host) {
    return find_embedding(pattern, host).has_value();
}

}  // namespace ramsey
