#include "ramsey/arrowing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ramsey/canonical.hpp"

namespace ramsey {

bool verify_good_coloring(const FiniteGraph& f, const Coloring& c, const FiniteGraph& g,
                          const FiniteGraph& h) {
    if (!c.total_on(f))
        throw std::invalid_argument("coloring is not total on f's edges");
    return !contains_subgraph(g, c.subgraph(Color::Red)) &&
           !contains_subgraph(h, c.subgraph(Color::Blue));
}

namespace {

// Shared coloring DFS. The pointed flag switches the red-side containment to
// a basepoint-preserving search rooted at f's basepoint.
struct ColoringSearch {
    const std::vector<Edge>& edges;
    const FiniteGraph& red_pattern;
    const FiniteGraph& blue_pattern;
    bool pointed = false;
    int f_basepoint = 0;
    int g_basepoint = 0;
    bool certify = false;

    std::map<std::pair<std::string, int>, bool> memo;
    std::vector<MonochromaticWitness> certificate;
    std::vector<Edge> red, blue;
    std::optional<Coloring> good;

    FiniteGraph colored_subgraph(const std::vector<Edge>& part, bool with_basepoint) const {
        if (!with_basepoint) return FiniteGraph::from_edges(part);
        std::vector<int> verts{f_basepoint};
        for (const auto& [u, v] : part) {
            verts.push_back(u);
            verts.push_back(v);
        }
        return FiniteGraph::from_parts(std::move(verts), part, true);
    }

    bool red_contains(const FiniteGraph& sub) {
        if (!pointed) return contains_subgraph(red_pattern, sub);
        PointedGraph host(sub, f_basepoint);
        return find_pointed_embedding(PointedGraph(red_pattern, g_basepoint), host).has_value();
    }

    bool mono_hit(const std::vector<Edge>& part, bool is_red) {
        FiniteGraph sub = colored_subgraph(part, pointed && is_red);
        std::string key = pointed && is_red ? canonical_form(PointedGraph(sub, f_basepoint))
                                            : canonical_form(sub);
        auto [it, inserted] = memo.try_emplace({std::move(key), is_red ? 0 : 1}, false);
        if (inserted)
            it->second = is_red ? red_contains(sub) : contains_subgraph(blue_pattern, sub);
        if (it->second && certify) record_witness(sub, is_red);
        return it->second;
    }

    void record_witness(const FiniteGraph& sub, bool is_red) {
        std::optional<EmbeddingMap> m;
        const FiniteGraph& pattern = is_red ? red_pattern : blue_pattern;
        if (pointed && is_red)
            m = find_pointed_embedding(PointedGraph(pattern, g_basepoint),
                                       PointedGraph(sub, f_basepoint));
        else
            m = find_embedding(pattern, sub);
        if (!m) return;
        MonochromaticWitness w{is_red ? Color::Red : Color::Blue, {}};
        for (const auto& [u, v] : pattern.edges())
            w.edges.push_back(make_edge(m->assignment.at(u), m->assignment.at(v)));
        std::sort(w.edges.begin(), w.edges.end());
        certificate.push_back(std::move(w));
    }

    // Returns true when a good coloring exists below this node.
    bool dfs(std::size_t i) {
        if (i == edges.size()) {
            Coloring c;
            for (const auto& e : red) c.assignment[e] = Color::Red;
            for (const auto& e : blue) c.assignment[e] = Color::Blue;
            good = std::move(c);
            return true;
        }
        red.push_back(edges[i]);
        bool red_dead = mono_hit(red, true);
        if (!red_dead && dfs(i + 1)) return true;
        red.pop_back();

        blue.push_back(edges[i]);
        bool blue_dead = mono_hit(blue, false);
        if (!blue_dead && dfs(i + 1)) return true;
        blue.pop_back();
        return false;
    }
};

ArrowingVerdict run_search(ColoringSearch& search, const ArrowsOptions& options) {
    search.certify = options.certify;
    ArrowingVerdict verdict;
    verdict.arrows = !search.dfs(0);
    if (!verdict.arrows) verdict.good_coloring = std::move(search.good);
    if (verdict.arrows && options.certify) verdict.certificate = std::move(search.certificate);
    return verdict;
}

}  // namespace

ArrowingVerdict arrows(const FiniteGraph& f, const FiniteGraph& g, const FiniteGraph& h,
                       const ArrowsOptions& options) {
    if (g.edges().empty() || h.edges().empty())
        throw std::invalid_argument("arrowing patterns must have at least one edge");
    ColoringSearch search{f.edges(), g, h};
    return run_search(search, options);
}

ArrowingVerdict arrows_pointed(const PointedGraph& f, const PointedGraph& g,
                               const FiniteGraph& h, const ArrowsOptions& options) {
    if (g.graph.edges().empty() || h.edges().empty())
        throw std::invalid_argument("arrowing patterns must have at least one edge");
    ColoringSearch search{f.graph.edges(), g.graph, h, true, f.basepoint, g.basepoint};
    return run_search(search, options);
}

bool is_minimal(const FiniteGraph& f, const FiniteGraph& g, const FiniteGraph& h) {
    if (!arrows(f, g, h).arrows) return false;
    for (const auto& e : f.edges())
        if (arrows(delete_edge(f, e), g, h).arrows) return false;
    return true;
}

std::vector<FiniteGraph> enumerate_minimal(const FiniteGraph& g, const FiniteGraph& h,
                                           int max_vertices, int max_edges) {
    if (max_vertices < 1 || max_edges < 1)
        throw std::invalid_argument("enumeration bounds must be >= 1");

    std::vector<FiniteGraph> arrowing_found;
    std::vector<FiniteGraph> minimal;
    for (const auto& f : enumerate_nonisomorphic_graphs(max_vertices, max_edges)) {
        if (f.empty()) continue;
        if (!arrows(f, g, h).arrows) continue;
        // A graph properly containing an arrowing graph is never minimal;
        // candidates arrive in edge-count order, so earlier finds suffice.
        bool contains_smaller = false;
        for (const auto& small : arrowing_found)
            if (small.edge_count() < f.edge_count() && contains_subgraph(small, f)) {
                contains_smaller = true;
                break;
            }
        arrowing_found.push_back(f);
        if (contains_smaller) continue;
        bool minimal_here = true;
        for (const auto& e : f.edges())
            if (arrows(delete_edge(f, e), g, h).arrows) {
                minimal_here = false;
                break;
            }
        if (minimal_here) minimal.push_back(f);
    }
    return minimal;
}

FamilyConditionReport check_family_conditions(const std::vector<FiniteGraph>& family,
                                              const FiniteGraph& g, const FiniteGraph& h,
                                              int max_vertices, int max_edges) {
    if (family.empty()) throw std::invalid_argument("family must be nonempty");

    FamilyConditionReport report;
    report.max_vertices = max_vertices;
    report.max_edges = max_edges;
    report.cond2_note =
        "bounded evidence only: arrowing graphs outside the enumeration bounds "
        "(including infinite graphs) were not examined";

    for (std::size_t i = 0; i < family.size(); ++i)
        if (!arrows(family[i], g, h).arrows) {
            report.cond1_all_arrow = false;
            report.cond1_failures.push_back(i);
        }

    for (const auto& candidate : enumerate_nonisomorphic_graphs(max_vertices, max_edges)) {
        if (candidate.empty()) continue;
        if (!arrows(candidate, g, h).arrows) continue;
        bool contains_member = false;
        for (const auto& f : family)
            if (contains_subgraph(f, candidate)) {
                contains_member = true;
                break;
            }
        if (!contains_member) {
            report.cond2_within_bounds = false;
            report.cond2_counterexamples.push_back(candidate);
        }
    }

    report.cond3_vacuous = family.size() < 2;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (contains_subgraph(family[i], family[j]) ||
                contains_subgraph(family[j], family[i])) {
                report.cond3_antichain = false;
                report.cond3_violations.emplace_back(i, j);
            }
    return report;
}

}  // namespace ramsey
