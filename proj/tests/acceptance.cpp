// Acceptance suite: each criterion prints exactly one PASS/FAIL line with
// its runtime; doctest assertions carry the details on failure.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/families.hpp"
#include "ramsey/hubgraph.hpp"
#include "ramsey/konig.hpp"
#include "ramsey/selfembed.hpp"

using namespace ramsey;

namespace {

struct Criterion {
    const char* name;
    bool ok = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(const char* n) : name(n) {}
    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("%-52s %s  (%lld ms)\n", name, ok ? "PASS" : "FAIL",
                    static_cast<long long>(ms));
        std::fflush(stdout);
    }
    bool note(bool cond) {
        ok = ok && cond;
        return cond;
    }
};

#define ACCEPT(criterion, expr) CHECK((criterion).note(static_cast<bool>(expr)))

const FiniteGraph kK2 = matching(1);
const FiniteGraph kP3 = path(3);
const FiniteGraph kK3 = complete(3);
const FiniteGraph kTwoK2 = matching(2);
const FiniteGraph kStar3 = star(3);

}  // namespace

TEST_CASE("criterion 1: pruned decider equals exhaustive enumeration") {
    Criterion crit("1. oracle equivalence, all F with <= 7 edges");
    std::vector<std::pair<FiniteGraph, FiniteGraph>> catalog{
        {kK2, kK2}, {kP3, kP3}, {kP3, kTwoK2}, {kK3, kK2}, {kStar3, kTwoK2}};
    auto graphs = enumerate_nonisomorphic_graphs(14, 7);
    ACCEPT(crit, graphs.size() > 200);  // 290 graphs followed by the empty one
    for (const auto& f : graphs) {
        if (f.empty()) continue;
        for (const auto& [g, h] : catalog) {
            bool fast = arrows(f, g, h).arrows;
            bool slow = oracle::arrows_exhaustive(f, g, h);
            if (fast != slow) CAPTURE(canonical_form(f));
            ACCEPT(crit, fast == slow);
        }
    }
}

TEST_CASE("criterion 2: nG is (G,nK2)-minimal, and nG-e colorings are good") {
    Criterion crit("2. nG minimal for (G,nK2), G connected finite");
    for (const auto& g : {path(3), path(4), complete(3), star(3)}) {
        for (int n : {2, 3}) {
            FiniteGraph ng = disjoint_union(std::vector<FiniteGraph>(n, g));
            ACCEPT(crit, is_minimal(ng, g, matching(n)));
            for (int comp = 0; comp < n; ++comp)
                for (const auto& e : g.edges()) {
                    auto [f, c] = good_coloring_nG_minus_e(g, n, comp, e);
                    ACCEPT(crit, verify_good_coloring(f, c, g, matching(n)));
                }
        }
    }
}

TEST_CASE("criterion 3: enumerate_minimal(G, K2) returns exactly {G}") {
    Criterion crit("3. R(G,K2) = {G} within |V(G)|,|E(G)| bounds");
    for (const auto& g : {path(3), path(4), complete(3), star(3)}) {
        auto list = enumerate_minimal(g, kK2, static_cast<int>(g.vertex_count()),
                                      static_cast<int>(g.edge_count()));
        ACCEPT(crit, list.size() == 1);
        if (list.size() == 1) ACCEPT(crit, canonical_form(list[0]) == canonical_form(g));
    }
}

TEST_CASE("criterion 4: comb self-embeddability worked examples") {
    Criterion crit("4. comb examples: l(n)=n, [2]per[1], [3]per[2]");

    auto v1 = comb_self_embeddable(ToothFn({}, ArithmeticTail{1, 1}));
    ACCEPT(crit, v1.self_embeddable);
    ACCEPT(crit, v1.shift == 1);

    auto v2 = comb_self_embeddable(ToothFn({2}, PeriodicTail{{1}}));
    ACCEPT(crit, !v2.self_embeddable);

    auto v3 = comb_self_embeddable(ToothFn({3}, PeriodicTail{{2}}));
    ACCEPT(crit, v3.self_embeddable);
    ACCEPT(crit, v3.normalized);
    ACCEPT(crit, v3.shift == 1);

    auto rewritten = normalize_comb(ToothFn({3}, PeriodicTail{{2}}));
    ACCEPT(crit, rewritten(1) == 1);
    bool tail_two = true;
    for (int n = 2; n <= 50; ++n) tail_two = tail_two && rewritten(n) == 2;
    ACCEPT(crit, tail_two);
}

namespace {

ToothFn random_tooth(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 6), val(1, 5), qlen(1, 4), coin(0, 1), step(0, 2);
    while (true) {
        std::vector<int> prefix(len(rng));
        for (auto& v : prefix) v = val(rng);
        ToothFn::Tail tail;
        if (coin(rng)) {
            std::vector<int> cycle(qlen(rng));
            for (auto& v : cycle) v = val(rng);
            tail = PeriodicTail{cycle};
        } else {
            tail = ArithmeticTail{val(rng), step(rng)};
        }
        ToothFn fn(std::move(prefix), std::move(tail));
        if (spine_degree_first_branch(fn)) return fn;
    }
}

}  // namespace

TEST_CASE("criterion 5: decider-constructor coherence on random tooth functions") {
    Criterion crit("5. 50 random combs: shifts verified, refusals certified");
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        ToothFn fn = random_tooth(rng);
        auto verdict = comb_self_embeddable(fn);
        const ToothFn& decided = *verdict.tooth;
        if (verdict.self_embeddable) {
            for (int depth : {5, 10, 20}) {
                auto m = comb_translation_embedding(decided, *verdict.shift, depth);
                auto comb = SymbolicGraph::comb(decided);
                ACCEPT(crit, validate_embedding(truncate(comb, depth),
                                                truncate(comb, depth + *verdict.shift), m));
            }
        } else {
            ACCEPT(crit, static_cast<int>(verdict.violations.size()) == verdict.p_max);
            for (const auto& [p, n] : verdict.violations)
                ACCEPT(crit, decided(n) > decided(n + p));
        }
    }
}

TEST_CASE("criterion 6: least arrowing truncation of the infinite complete graph") {
    Criterion crit("6. K_inf vs (K3,K3): depth 6, depth 5 refuted");
    auto result = finite_arrowing_subgraph(SymbolicGraph::complete_infinite(), kK3, kK3, 8);
    ACCEPT(crit, result.has_value());
    if (result) {
        ACCEPT(crit, result->depth == 6);
        ACCEPT(crit, canonical_form(result->truncation) == canonical_form(complete(6)));
    }
    ACCEPT(crit, !arrows(complete(5), kK3, kK3).arrows);
    ACCEPT(crit, !oracle::arrows_exhaustive(complete(5), kK3, kK3));
}

namespace {

HubGraph random_hub(std::mt19937& rng) {
    std::uniform_int_distribution<int> nd(1, 3), coin(0, 1), cnt(1, 3);
    int n = nd(rng);
    std::vector<HubGraph::LeafClass> classes;
    for (int sig = 1; sig + 1 < (1 << n); ++sig) {
        if (coin(rng)) continue;
        Signature s;
        for (int b = 0; b < n; ++b) s.push_back((sig >> b) & 1);
        classes.push_back({s, coin(rng) ? Cardinal::inf() : Cardinal::of(cnt(rng))});
    }
    classes.push_back({Signature(static_cast<std::size_t>(n), 1), Cardinal::inf()});
    std::vector<Edge> hub_edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng)) hub_edges.emplace_back(i, j);
    return HubGraph(n, hub_edges, classes);
}

}  // namespace

TEST_CASE("criterion 7: pigeonhole self-embedding on random hub graphs") {
    Criterion crit("7. 20 random hub graphs: embeddings validate");
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        HubGraph g = random_hub(rng);
        REQUIRE(is_family_member(g));
        for (int depth = 3; depth <= 8; ++depth) {
            auto m = construct_self_embedding(g, depth);
            auto pattern = hub_truncate(g, depth);
            auto host = hub_truncate(g, depth + 1);
            ACCEPT(crit, validate_embedding(pattern, host, m));
            std::set<int> image;
            for (const auto& [p, hv] : m.assignment) image.insert(hv);
            ACCEPT(crit, image.size() < host.vertex_count());
        }
    }
}

TEST_CASE("criterion 8: blue matching loop over all small colorings") {
    Criterion crit("8. elimination loop: V blue-free or nK2 certified");
    std::vector<FiniteGraph> hosts;
    for (int d = 1; d <= 4; ++d) {
        hosts.push_back(truncate(SymbolicGraph::ray(), d));
        hosts.push_back(truncate(SymbolicGraph::comb(ToothFn({}, PeriodicTail{{1}})), d));
    }
    for (const auto& f : hosts) {
        const auto& edges = f.edges();
        REQUIRE(edges.size() <= 4);
        for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
            Coloring c;
            for (std::size_t i = 0; i < edges.size(); ++i)
                c.assignment[edges[i]] = (mask >> i) & 1 ? Color::Blue : Color::Red;
            for (int n : {2, 3}) {
                auto r = blue_matching_vertex_set(f, c, n);
                if (r.ok()) {
                    ACCEPT(crit, r.vertices.size() <= 2u * (n - 1));
                    auto rest = delete_vertices(f, r.vertices);
                    bool blue_free = true;
                    for (const auto& e : rest.edges())
                        blue_free = blue_free && c.assignment.at(e) == Color::Red;
                    ACCEPT(crit, blue_free);
                } else {
                    ACCEPT(crit, r.blue_matching->size() == static_cast<std::size_t>(n));
                    std::set<int> ends;
                    bool disjoint_blue = true;
                    for (const auto& [u, v] : *r.blue_matching) {
                        disjoint_blue = disjoint_blue &&
                                        c.assignment.at(make_edge(u, v)) == Color::Blue &&
                                        ends.insert(u).second && ends.insert(v).second;
                    }
                    ACCEPT(crit, disjoint_blue);
                }
            }
        }
    }
}

TEST_CASE("criterion 9: ray prefixes and level counts") {
    Criterion crit("9. ray prefixes exist; level sizes match brute counts");
    std::vector<SymbolicGraph> hosts{
        SymbolicGraph::ray(), SymbolicGraph::double_ray(), SymbolicGraph::k_ray(3),
        SymbolicGraph::comb(ToothFn({}, ArithmeticTail{1, 1}))};
    for (const auto& host : hosts)
        for (int depth = 1; depth <= 8; ++depth)
            ACCEPT(crit, ray_prefix_search(host, depth, depth).has_value());

    std::vector<PointedGraph> patterns{PointedGraph(path(3), 0), PointedGraph(path(4), 0),
                                       PointedGraph(path(6), 0), PointedGraph(star(3), 0),
                                       PointedGraph(complete(3), 0), PointedGraph(cycle(4), 0)};
    std::vector<PointedGraph> hosts2{
        PointedGraph(truncate(SymbolicGraph::ray(), 6), 0),
        PointedGraph(truncate(SymbolicGraph::k_ray(3), 3), 0),
        PointedGraph(truncate(SymbolicGraph::comb(ToothFn({}, ArithmeticTail{1, 1})), 3), 0),
        PointedGraph(star(4), 0),
        PointedGraph(complete(5), 0),
        PointedGraph(cycle(6), 0)};
    for (const auto& pattern : patterns)
        for (const auto& host : hosts2) {
            const int top = static_cast<int>(pattern.graph.vertex_count()) - 1;
            auto sets = build_level_sets(pattern, host, top);
            for (int level = 0; level <= top; ++level)
                ACCEPT(crit, static_cast<long>(sets.levels[level].size()) ==
                                 oracle::count_pointed_prefix_embeddings(
                                     pattern.graph, sets.pattern_order, level, host));
        }
}
