#pragma once

#include <string>

#include "ramsey/arrowing.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/families.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/hubgraph.hpp"
#include "ramsey/konig.hpp"
#include "ramsey/selfembed.hpp"

namespace ramsey {

// Parsers accept the canonical JSON object form and, for plain graphs, the
// terse edge-list line "1-2,2-3,3-1". All throw std::invalid_argument with a
// one-line diagnostic on malformed input.

/// {"vertices":[ints],"edges":[[u,v],...]} or a terse edge list.
FiniteGraph parse_graph(const std::string& text);

/// Graph JSON with an additional "basepoint": int.
PointedGraph parse_pointed_graph(const std::string& text);

/// {"family":"ray"|"doubleray"|"kray"|"star"|"kinf"|"comb"|"matching"|
///  "union"|"hub", ...family parameters...}
SymbolicGraph parse_symbolic_graph(const std::string& text);

/// {"prefix":[ints],"tail":{"kind":"periodic","cycle":[...]}} or
/// {"kind":"arithmetic","start":s,"step":d}; also accepts a full comb
/// family object.
ToothFn parse_tooth_fn(const std::string& text);

/// {"n":2,"hub_edges":[[1,2]],"classes":[{"sig":[1,0],"count":"inf"},...]}
HubGraph parse_hub_graph(const std::string& text);

/// {"red":[[u,v],...],"blue":[[u,v],...]}
Coloring parse_coloring(const std::string& text);

std::string graph_to_json(const FiniteGraph& g, int indent = -1);
std::string pointed_graph_to_json(const PointedGraph& g, int indent = -1);
std::string coloring_to_json(const Coloring& c, int indent = -1);
std::string embedding_to_json(const EmbeddingMap& m, int indent = -1);
std::string hub_graph_to_json(const HubGraph& g, int indent = -1);
std::string tooth_fn_to_json(const ToothFn& fn, int indent = -1);
std::string verdict_to_json(const ArrowingVerdict& v, int indent = -1);
std::string family_report_to_json(const FamilyConditionReport& r, int indent = -1);
std::string transfer_report_to_json(const TransferReport& r, int indent = -1);

/// Undirected DOT for rendering; isolated vertices appear as bare nodes.
std::string graph_to_dot(const FiniteGraph& g);

}  // namespace ramsey
