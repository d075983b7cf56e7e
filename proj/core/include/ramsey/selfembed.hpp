#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramsey/embedding.hpp"
#include "ramsey/families.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Outcome of the comb self-embeddability decision.
struct CombVerdict {
    bool self_embeddable = false;
    std::optional<int> shift;  // least p with l(n) <= l(n+p) for all n
    bool normalized = false;   // whether the index-exchange rewrite was applied
    int s_value = 0;           // first branch index of the decided function
    /// The tooth function the verdict (and shift) refer to; equals the input
    /// unless normalization rewrote it.
    std::optional<ToothFn> tooth;
    /// When not self-embeddable: for every p up to p_max, the least n with
    /// l(n) > l(n+p).
    std::vector<std::pair<int, int>> violations;
    int p_max = 0;
};

/// Index-exchange rewrite making s >= l(s)-1 while preserving the comb's
/// isomorphism type: the initial spine segment and the first nontrivial
/// tooth swap roles. Returns the input unchanged when it already qualifies.
/// Throws std::invalid_argument for ray-like functions (no branch).
ToothFn normalize_comb(const ToothFn& fn);

/// Decides whether the comb properly embeds into itself, normalizing first.
/// The existential condition is reduced to a finite check: periodic tails
/// need only p, n within prefix+cycle range; arithmetic tails with positive
/// step only constrain prefix indices. Throws for ray-like input.
CombVerdict comb_self_embeddable(const ToothFn& fn);

/// The positive-translation embedding by p, realized on truncations:
/// truncate(comb, depth) -> truncate(comb, depth+p), spine x_n -> x_{n+p},
/// tooth at x_n into the tooth at x_{n+p}. Throws std::invalid_argument
/// naming the violating index if l(n) <= l(n+p) fails for some n <= depth.
EmbeddingMap comb_translation_embedding(const ToothFn& fn, int p, int depth);

/// Vertex designation inside a comb truncation: tooth_pos 0 is the spine
/// vertex x_{spine_index}, otherwise the tooth_pos-th tooth vertex.
struct CombVertex {
    int spine_index = 0;
    int tooth_pos = 0;

    int id() const { return tooth_pos == 0 ? comb_spine_id(spine_index)
                                           : comb_tooth_id(spine_index, tooth_pos); }
};

struct CombAvoidEmbedding {
    int translation = 0;  // a*p, the least multiple of p beyond the vertex
    EmbeddingMap map;     // truncate(comb, depth) -> truncate(comb, depth+translation) - v
};

/// Translation by the least multiple of p strictly beyond v's spine index,
/// so the image avoids v entirely.
CombAvoidEmbedding comb_avoid_vertex_embedding(const ToothFn& fn, CombVertex v, int p, int depth);

/// Finite vertex/edge set to remove from a truncation, in truncation ids.
struct DeletionSet {
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

struct DeletionContainment {
    bool contained = false;
    int margin = 0;  // extra depth needed on the host side
    EmbeddingMap embedding;
};

/// Constructive check of finite-deletion containment for strongly
/// self-embeddable families: builds an embedding of truncate(g, depth) into
/// truncate(g, depth+margin) minus the deleted set and validates it.
/// Supported: Ray, CompleteInfinite, and combs self-embeddable by direct
/// translation. Throws std::invalid_argument otherwise.
DeletionContainment verify_deletion_containment(const SymbolicGraph& g, const DeletionSet& del,
                                                int depth);

}  // namespace ramsey
