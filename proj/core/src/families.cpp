#include "ramsey/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

ToothFn::ToothFn(std::vector<int> prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    for (int v : prefix_)
        if (v < 1) throw std::invalid_argument("tooth values must be >= 1");
    if (auto* p = std::get_if<PeriodicTail>(&tail_)) {
        if (p->cycle.empty()) throw std::invalid_argument("periodic tail needs a nonempty cycle");
        for (int v : p->cycle)
            if (v < 1) throw std::invalid_argument("tooth values must be >= 1");
    } else {
        const auto& a = std::get<ArithmeticTail>(tail_);
        if (a.start < 1) throw std::invalid_argument("arithmetic tail start must be >= 1");
        if (a.step < 0) throw std::invalid_argument("arithmetic tail step must be >= 0");
    }
}

int ToothFn::operator()(int n) const {
    if (n < 1) throw std::invalid_argument("tooth index must be >= 1");
    const int m = static_cast<int>(prefix_.size());
    if (n <= m) return prefix_[n - 1];
    if (const auto* p = std::get_if<PeriodicTail>(&tail_)) {
        const int q = static_cast<int>(p->cycle.size());
        return p->cycle[(n - m - 1) % q];
    }
    const auto& a = std::get<ArithmeticTail>(tail_);
    return a.start + (n - m - 1) * a.step;
}

int eval_tooth(const ToothFn& fn, int n) { return fn(n); }

std::optional<int> spine_degree_first_branch(const ToothFn& fn) {
    const int m = static_cast<int>(fn.prefix().size());
    for (int n = 1; n <= m; ++n)
        if (fn(n) > 1) return n;
    if (const auto* p = std::get_if<PeriodicTail>(&fn.tail())) {
        const int q = static_cast<int>(p->cycle.size());
        for (int n = m + 1; n <= m + q; ++n)
            if (fn(n) > 1) return n;
        return std::nullopt;
    }
    const auto& a = std::get<ArithmeticTail>(fn.tail());
    if (a.start > 1) return m + 1;
    if (a.step == 0) return std::nullopt;
    // start == 1, step >= 1: first tail value above 1 is the second one.
    return m + 2;
}

SymbolicGraph SymbolicGraph::ray() { return {Family::Ray, 0}; }
SymbolicGraph SymbolicGraph::double_ray() { return {Family::DoubleRay, 0}; }
SymbolicGraph SymbolicGraph::star() { return {Family::Star, 0}; }
SymbolicGraph SymbolicGraph::complete_infinite() { return {Family::CompleteInfinite, 0}; }

SymbolicGraph SymbolicGraph::k_ray(int k) {
    if (k < 1) throw std::invalid_argument("k-ray needs k >= 1");
    return {Family::KRay, k};
}

SymbolicGraph SymbolicGraph::comb(ToothFn fn) {
    SymbolicGraph g{Family::Comb, 0};
    g.tooth_ = std::move(fn);
    return g;
}

SymbolicGraph SymbolicGraph::matching_graph(int n) {
    if (n < 1) throw std::invalid_argument("matching needs n >= 1");
    return {Family::Matching, n};
}

SymbolicGraph SymbolicGraph::hub(HubGraph g) {
    SymbolicGraph s{Family::Hub, 0};
    s.hub_ = std::move(g);
    return s;
}

SymbolicGraph SymbolicGraph::union_copies(int n, SymbolicGraph inner) {
    if (n < 1) throw std::invalid_argument("union needs n >= 1");
    SymbolicGraph g{Family::Union, n};
    g.inner_ = std::make_shared<const SymbolicGraph>(std::move(inner));
    return g;
}

const ToothFn& SymbolicGraph::tooth() const {
    if (!tooth_) throw std::logic_error("not a comb");
    return *tooth_;
}

const HubGraph& SymbolicGraph::hub_graph() const {
    if (!hub_) throw std::logic_error("not a hub graph");
    return *hub_;
}

const SymbolicGraph& SymbolicGraph::inner() const {
    if (!inner_) throw std::logic_error("not a union");
    return *inner_;
}

bool SymbolicGraph::operator==(const SymbolicGraph& o) const {
    if (family_ != o.family_ || param_ != o.param_ || tooth_ != o.tooth_ || hub_ != o.hub_)
        return false;
    if (!inner_ != !o.inner_) return false;
    return !inner_ || *inner_ == *o.inner_;
}

namespace {
int cantor_pair(int a, int b) { return (a + b) * (a + b + 1) / 2 + b; }
}  // namespace

int comb_spine_id(int n) { return cantor_pair(n, 0); }
int comb_tooth_id(int n, int t) {
    if (t < 1) throw std::invalid_argument("tooth position starts at 1");
    return cantor_pair(n, t);
}

std::pair<int, int> comb_decode_id(int id) {
    if (id < 0) throw std::invalid_argument("comb ids are nonnegative");
    int w = 0;
    while ((w + 1) * (w + 2) / 2 <= id) ++w;
    int t = id - w * (w + 1) / 2;
    return {w - t, t};
}

FiniteGraph truncate(const SymbolicGraph& g, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    using F = SymbolicGraph::Family;
    std::vector<Edge> edges;
    switch (g.family()) {
        case F::Ray:
            for (int i = 0; i < depth; ++i) edges.emplace_back(i, i + 1);
            return FiniteGraph::from_edges(std::move(edges));
        case F::DoubleRay: {
            // x_0 -> 0, x_n -> 2n-1 (n > 0), x_{-n} -> 2n: ids do not move
            // when the window widens.
            auto id = [](int n) { return n > 0 ? 2 * n - 1 : -2 * n; };
            for (int n = -depth; n < depth; ++n)
                edges.push_back(make_edge(id(n), id(n + 1)));
            return FiniteGraph::from_edges(std::move(edges));
        }
        case F::KRay: {
            const int k = g.parameter();
            auto id = [k](int arm, int i) { return (i - 1) * k + arm; };  // center is 0
            for (int arm = 1; arm <= k; ++arm) {
                edges.push_back(make_edge(0, id(arm, 1)));
                for (int i = 1; i < depth; ++i)
                    edges.push_back(make_edge(id(arm, i), id(arm, i + 1)));
            }
            return FiniteGraph::from_edges(std::move(edges));
        }
        case F::Star:
            return star(depth);
        case F::CompleteInfinite:
            return complete(depth);
        case F::Comb: {
            const ToothFn& fn = g.tooth();
            for (int n = 0; n < depth; ++n)
                edges.push_back(make_edge(comb_spine_id(n), comb_spine_id(n + 1)));
            for (int n = 1; n <= depth; ++n) {
                const int order = fn(n);
                for (int t = 1; t < order; ++t)
                    edges.push_back(make_edge(t == 1 ? comb_spine_id(n) : comb_tooth_id(n, t - 1),
                                              comb_tooth_id(n, t)));
            }
            return FiniteGraph::from_edges(std::move(edges));
        }
        case F::Matching:
            return matching(g.parameter());
        case F::Union: {
            std::vector<FiniteGraph> parts(static_cast<std::size_t>(g.parameter()),
                                           truncate(g.inner(), depth));
            return disjoint_union(parts);
        }
        case F::Hub:
            throw std::invalid_argument("hub graphs are truncated by hub_truncate");
    }
    throw std::logic_error("unreachable");
}

int natural_root(const SymbolicGraph& g) {
    return g.family() == SymbolicGraph::Family::Hub ? 1 : 0;
}

Cardinal root_degree(const SymbolicGraph& g) {
    using F = SymbolicGraph::Family;
    switch (g.family()) {
        case F::Ray: return Cardinal::of(1);
        case F::DoubleRay: return Cardinal::of(2);
        case F::KRay: return Cardinal::of(g.parameter());
        case F::Star: return Cardinal::inf();
        case F::CompleteInfinite: return Cardinal::inf();
        case F::Comb: return Cardinal::of(1);
        case F::Matching: return Cardinal::of(1);
        case F::Union: return root_degree(g.inner());
        case F::Hub: return g.hub_graph().hub_degree(1);
    }
    throw std::logic_error("unreachable");
}

}  // namespace ramsey
