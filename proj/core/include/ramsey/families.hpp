#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/hubgraph.hpp"

namespace ramsey {

struct PeriodicTail {
    std::vector<int> cycle;  // nonempty, values >= 1
    bool operator==(const PeriodicTail&) const = default;
};
struct ArithmeticTail {
    int start = 1;  // >= 1
    int step = 0;   // >= 0
    bool operator==(const ArithmeticTail&) const = default;
};

/// Tooth-order function l : N -> N with a finite prefix and an eventually
/// periodic or eventually arithmetic tail. l(n) = prefix[n] for n <= m, then
/// cycle[(n-m-1) mod q] or start + (n-m-1)*step.
class ToothFn {
public:
    using Tail = std::variant<PeriodicTail, ArithmeticTail>;

    ToothFn(std::vector<int> prefix, Tail tail);

    int operator()(int n) const;
    const std::vector<int>& prefix() const { return prefix_; }
    const Tail& tail() const { return tail_; }

    bool operator==(const ToothFn&) const = default;

private:
    std::vector<int> prefix_;
    Tail tail_;
};

/// Throws std::invalid_argument for n < 1.
int eval_tooth(const ToothFn& fn, int n);

/// Least n with l(n) > 1, i.e. the first spine vertex of degree 3; absent
/// when the comb degenerates to a ray.
std::optional<int> spine_degree_first_branch(const ToothFn& fn);

/// Finite description of an infinite family member (or nK2, the one
/// intrinsically finite variant).
class SymbolicGraph {
public:
    enum class Family { Ray, DoubleRay, KRay, Star, CompleteInfinite, Comb, Matching, Hub, Union };

    static SymbolicGraph ray();
    static SymbolicGraph double_ray();
    static SymbolicGraph k_ray(int k);
    static SymbolicGraph star();
    static SymbolicGraph complete_infinite();
    static SymbolicGraph comb(ToothFn fn);
    static SymbolicGraph matching_graph(int n);
    static SymbolicGraph hub(HubGraph g);
    static SymbolicGraph union_copies(int n, SymbolicGraph inner);

    Family family() const { return family_; }
    int parameter() const { return param_; }  // k for KRay, n for Matching/Union
    const ToothFn& tooth() const;
    const HubGraph& hub_graph() const;
    const SymbolicGraph& inner() const;

    bool operator==(const SymbolicGraph& o) const;

private:
    SymbolicGraph(Family f, int param) : family_(f), param_(param) {}
    Family family_;
    int param_ = 0;
    std::optional<ToothFn> tooth_;
    std::optional<HubGraph> hub_;
    std::shared_ptr<const SymbolicGraph> inner_;
};

/// Depth-d finite approximation, cut at edge-radius `depth` from the natural
/// root; comb teeth are kept whole. Vertex ids are stable across depths for
/// every non-union variant, so truncations nest as labeled subgraphs.
/// Hub variants are served by hub_truncate and rejected here.
FiniteGraph truncate(const SymbolicGraph& g, int depth);

/// Root vertex id used by truncate: ray endpoint, k-ray center, star center,
/// comb spine start, first hub for hub graphs.
int natural_root(const SymbolicGraph& g);

/// Degree of the natural root in the infinite graph.
Cardinal root_degree(const SymbolicGraph& g);

// Stable vertex ids inside comb truncations (Cantor pairing of spine index
// and tooth position).
int comb_spine_id(int n);
int comb_tooth_id(int n, int t);

/// Inverse of the comb id scheme: (spine index, tooth position), where
/// tooth position 0 denotes the spine vertex itself.
std::pair<int, int> comb_decode_id(int id);

}  // namespace ramsey
