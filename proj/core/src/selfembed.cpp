#include "ramsey/selfembed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

int require_branch(const ToothFn& fn) {
    auto s = spine_degree_first_branch(fn);
    if (!s)
        throw std::invalid_argument(
            "tooth function is identically 1: the comb is a ray, use the Ray family");
    return *s;
}

// Converts a step-0 arithmetic tail to the equivalent periodic one so that
// the decision bounds below only meet two tail shapes.
ToothFn canonical_tail(const ToothFn& fn) {
    if (const auto* a = std::get_if<ArithmeticTail>(&fn.tail()); a && a->step == 0)
        return ToothFn(fn.prefix(), PeriodicTail{{a->start}});
    return fn;
}

// Least n in [1, n_bound] with fn(n) > fn(n+p), if any.
std::optional<int> violating_index(const ToothFn& fn, int p, int n_bound) {
    for (int n = 1; n <= n_bound; ++n)
        if (fn(n) > fn(n + p)) return n;
    return std::nullopt;
}

}  // namespace

ToothFn normalize_comb(const ToothFn& fn) {
    const int s = require_branch(fn);
    const int ls = fn(s);
    if (s >= ls - 1) return fn;

    // Exchange the initial spine segment x_0..x_s with the tooth P_{l(s)};
    // indices past the swap shift down by delta.
    const int delta = ls - s - 1;
    const int m = static_cast<int>(fn.prefix().size());
    const int new_m = std::max(ls - 1, m + delta);

    std::vector<int> prefix(new_m);
    for (int n = 1; n <= new_m; ++n) {
        if (n < ls - 1)
            prefix[n - 1] = 1;
        else if (n == ls - 1)
            prefix[n - 1] = s + 1;
        else
            prefix[n - 1] = fn(n - delta);
    }

    ToothFn::Tail tail = fn.tail();
    if (auto* per = std::get_if<PeriodicTail>(&tail)) {
        const int q = static_cast<int>(per->cycle.size());
        const int rot = (new_m - delta - m) % q;
        std::vector<int> cycle(q);
        for (int i = 0; i < q; ++i) cycle[i] = per->cycle[(i + rot) % q];
        tail = PeriodicTail{std::move(cycle)};
    } else {
        auto arith = std::get<ArithmeticTail>(tail);
        arith.start += (new_m - m - delta) * arith.step;
        tail = arith;
    }
    return ToothFn(std::move(prefix), std::move(tail));
}

CombVerdict comb_self_embeddable(const ToothFn& fn) {
    require_branch(fn);
    ToothFn work = normalize_comb(fn);

    CombVerdict verdict;
    verdict.normalized = !(work == fn);
    verdict.s_value = *spine_degree_first_branch(work);
    verdict.tooth = work;

    const ToothFn decide = canonical_tail(work);
    const int m = static_cast<int>(decide.prefix().size());

    int p_max, n_bound;
    if (const auto* per = std::get_if<PeriodicTail>(&decide.tail())) {
        // Beyond the prefix both sides of l(n) <= l(n+p) are q-periodic in n,
        // and the condition for p > m depends only on p mod q, so p and n
        // range over one full period past the prefix.
        const int q = static_cast<int>(per->cycle.size());
        p_max = m + q;
        n_bound = m + q;
    } else {
        // Strictly increasing tail: only prefix indices constrain, and large
        // enough p pushes every comparison into the tail.
        const auto& a = std::get<ArithmeticTail>(decide.tail());
        int max_prefix = 1;
        for (int v : decide.prefix()) max_prefix = std::max(max_prefix, v);
        const int climb = std::max(0, (max_prefix - a.start + a.step - 1) / a.step);
        p_max = m + climb + 1;
        n_bound = m;
    }
    verdict.p_max = p_max;

    for (int p = 1; p <= p_max; ++p) {
        auto bad = violating_index(decide, p, n_bound);
        if (!bad) {
            verdict.self_embeddable = true;
            verdict.shift = p;
            return verdict;
        }
        verdict.violations.emplace_back(p, *bad);
    }
    if (std::holds_alternative<ArithmeticTail>(decide.tail()) &&
        std::get<ArithmeticTail>(decide.tail()).step > 0)
        throw std::logic_error("increasing tail must admit a shift within the bound");
    return verdict;
}

EmbeddingMap comb_translation_embedding(const ToothFn& fn, int p, int depth) {
    if (p < 1 || depth < 1) throw std::invalid_argument("shift and depth must be >= 1");
    require_branch(fn);
    for (int n = 1; n <= depth; ++n)
        if (fn(n) > fn(n + p))
            throw std::invalid_argument("translation by " + std::to_string(p) +
                                        " fails at spine index " + std::to_string(n) + ": l(" +
                                        std::to_string(n) + ")=" + std::to_string(fn(n)) + " > " +
                                        std::to_string(fn(n + p)));

    EmbeddingMap map;
    for (int n = 0; n <= depth; ++n)
        map.assignment[comb_spine_id(n)] = comb_spine_id(n + p);
    for (int n = 1; n <= depth; ++n)
        for (int t = 1; t < fn(n); ++t)
            map.assignment[comb_tooth_id(n, t)] = comb_tooth_id(n + p, t);

    const SymbolicGraph comb = SymbolicGraph::comb(fn);
    if (!validate_embedding(truncate(comb, depth), truncate(comb, depth + p), map))
        throw std::logic_error("constructed comb translation failed validation");
    return map;
}

CombAvoidEmbedding comb_avoid_vertex_embedding(const ToothFn& fn, CombVertex v, int p,
                                               int depth) {
    if (p < 1 || depth < 1) throw std::invalid_argument("shift and depth must be >= 1");
    if (v.spine_index < 0 || v.tooth_pos < 0)
        throw std::invalid_argument("malformed vertex designation");
    if (v.tooth_pos > 0 && (v.spine_index < 1 || v.tooth_pos >= fn(v.spine_index)))
        throw std::invalid_argument("designated tooth vertex does not exist");

    const int a = v.spine_index / p + 1;  // least a with a*p > spine index
    const int shift = a * p;
    EmbeddingMap map = comb_translation_embedding(fn, shift, depth);

    const SymbolicGraph comb = SymbolicGraph::comb(fn);
    FiniteGraph host = delete_vertices(truncate(comb, depth + shift), {v.id()});
    if (!validate_embedding(truncate(comb, depth), host, map))
        throw std::logic_error("avoid-vertex embedding failed validation");
    return {shift, std::move(map)};
}

namespace {

// Least direct translation shift for the given function, without
// normalization; deletion containment needs the literal translation.
std::optional<int> direct_shift(const ToothFn& fn) {
    const ToothFn decide = canonical_tail(fn);
    const int m = static_cast<int>(decide.prefix().size());
    int p_max, n_bound;
    if (const auto* per = std::get_if<PeriodicTail>(&decide.tail())) {
        const int q = static_cast<int>(per->cycle.size());
        p_max = n_bound = m + q;
    } else {
        const auto& a = std::get<ArithmeticTail>(decide.tail());
        int max_prefix = 1;
        for (int val : decide.prefix()) max_prefix = std::max(max_prefix, val);
        p_max = m + std::max(0, (max_prefix - a.start + a.step - 1) / a.step) + 1;
        n_bound = m;
    }
    for (int p = 1; p <= p_max; ++p)
        if (!violating_index(decide, p, n_bound)) return p;
    return std::nullopt;
}

FiniteGraph apply_deletions(FiniteGraph g, const DeletionSet& del) {
    for (const auto& e : del.edges) g = delete_edge(g, e);
    std::vector<int> still_present;
    for (int v : del.vertices)
        if (g.has_vertex(v)) still_present.push_back(v);  // edge removal may have dropped it
    return delete_vertices(g, still_present);
}

}  // namespace

DeletionContainment verify_deletion_containment(const SymbolicGraph& g, const DeletionSet& del,
                                                int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    using F = SymbolicGraph::Family;
    DeletionContainment out;

    switch (g.family()) {
        case F::Ray: {
            int max_touched = -1;
            for (int v : del.vertices) max_touched = std::max(max_touched, v);
            for (const auto& [u, v] : del.edges) max_touched = std::max({max_touched, u, v});
            out.margin = max_touched + 1;
            for (int n = 0; n <= depth; ++n) out.embedding.assignment[n] = n + out.margin;
            break;
        }
        case F::CompleteInfinite: {
            std::vector<int> forbidden(del.vertices);
            for (const auto& [u, v] : del.edges) {
                forbidden.push_back(u);
                forbidden.push_back(v);
            }
            std::sort(forbidden.begin(), forbidden.end());
            forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
            out.margin = static_cast<int>(forbidden.size());
            int next = 0;
            for (int i = 0; i < depth; ++i) {
                while (std::binary_search(forbidden.begin(), forbidden.end(), next)) ++next;
                out.embedding.assignment[i] = next++;
            }
            break;
        }
        case F::Comb: {
            auto p = direct_shift(g.tooth());
            if (!p)
                throw std::invalid_argument(
                    "comb admits no translation self-embedding; only combs satisfying the "
                    "shift condition are supported");
            int max_spine = -1;
            for (int v : del.vertices) max_spine = std::max(max_spine, comb_decode_id(v).first);
            for (const auto& [u, v] : del.edges)
                max_spine = std::max(
                    {max_spine, comb_decode_id(u).first, comb_decode_id(v).first});
            const int a = max_spine < 0 ? 1 : max_spine / *p + 1;
            out.margin = a * *p;
            out.embedding = comb_translation_embedding(g.tooth(), out.margin, depth);
            break;
        }
        default:
            throw std::invalid_argument(
                "deletion containment supported for Ray, CompleteInfinite and qualifying combs");
    }

    FiniteGraph pattern = truncate(g, depth);
    FiniteGraph host = apply_deletions(truncate(g, depth + out.margin), del);
    out.contained = validate_embedding(pattern, host, out.embedding);
    return out;
}

}  // namespace ramsey
