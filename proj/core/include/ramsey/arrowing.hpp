#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Monochromatic witness recorded when a branch of the coloring search dies:
/// the edges of the forced red G (or blue H) inside the partial coloring.
struct MonochromaticWitness {
    Color color;
    std::vector<Edge> edges;
};

struct ArrowingVerdict {
    bool arrows = false;
    /// A (G,H)-good coloring; present exactly when arrows is false.
    std::optional<Coloring> good_coloring;
    /// Per-branch monochromatic witness sets; populated on request for
    /// arrowing instances (the finite edge sets that defeat each coloring
    /// class the search explored).
    std::vector<MonochromaticWitness> certificate;
};

struct ArrowsOptions {
    bool certify = false;
};

/// True iff c leaves no red copy of g and no blue copy of h in f.
/// Throws std::invalid_argument unless c is total on f's edges.
bool verify_good_coloring(const FiniteGraph& f, const Coloring& c, const FiniteGraph& g,
                          const FiniteGraph& h);

/// Decides f -> (g,h) by depth-first search over edge colorings in fixed
/// edge order, red tried first, pruning any branch whose partial red
/// subgraph already contains g or partial blue contains h. Containment
/// checks are memoized on the colored subgraph's canonical form.
ArrowingVerdict arrows(const FiniteGraph& f, const FiniteGraph& g, const FiniteGraph& h,
                       const ArrowsOptions& options = {});

/// Pointed variant: every coloring must yield a red g embedded with
/// f's basepoint mapped from g's, or a blue (unpointed) h.
ArrowingVerdict arrows_pointed(const PointedGraph& f, const PointedGraph& g,
                               const FiniteGraph& h, const ArrowsOptions& options = {});

/// f arrows (g,h) while no single-edge deletion of f does.
bool is_minimal(const FiniteGraph& f, const FiniteGraph& g, const FiniteGraph& h);

/// All pairwise non-isomorphic (g,h)-minimal graphs within the bounds,
/// ordered by edge count then canonical label.
std::vector<FiniteGraph> enumerate_minimal(const FiniteGraph& g, const FiniteGraph& h,
                                           int max_vertices, int max_edges);

/// Bounded evidence report for the arrowing-family conditions: (1) every
/// family member arrows (g,h) — exact; (2) every arrowing graph within the
/// enumeration bounds contains a family member — bounded evidence only,
/// never a proof, since arrowing graphs outside the bounds (including
/// infinite ones) are not examined; (3) no two family members contain each
/// other — exact.
struct FamilyConditionReport {
    bool cond1_all_arrow = true;
    std::vector<std::size_t> cond1_failures;  // indices into the family

    bool cond2_within_bounds = true;
    int max_vertices = 0, max_edges = 0;
    std::vector<FiniteGraph> cond2_counterexamples;  // arrowing graphs containing no member
    std::string cond2_note;

    bool cond3_antichain = true;
    bool cond3_vacuous = false;
    std::vector<std::pair<std::size_t, std::size_t>> cond3_violations;
};

FamilyConditionReport check_family_conditions(const std::vector<FiniteGraph>& family,
                                              const FiniteGraph& g, const FiniteGraph& h,
                                              int max_vertices, int max_edges);

}  // namespace ramsey
