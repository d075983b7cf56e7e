#include "ramsey/io.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace ramsey {

using nlohmann::json;

namespace {

json must_parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

std::vector<Edge> edge_array(const json& j, const char* key) {
    std::vector<Edge> edges;
    if (!j.contains(key)) return edges;
    for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument(std::string(key) + " entries must be [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

FiniteGraph graph_from_json(const json& j) {
    auto edges = edge_array(j, "edges");
    std::vector<int> verts;
    if (j.contains("vertices"))
        for (const auto& v : j.at("vertices")) verts.push_back(v.get<int>());
    else
        for (const auto& [u, v] : edges) {
            verts.push_back(u);
            verts.push_back(v);
        }
    // Files may list isolated vertices (single-vertex patterns); honor them.
    bool isolated = false;
    for (int v : verts)
        isolated = isolated ||
                   std::none_of(edges.begin(), edges.end(),
                                [&](const Edge& e) { return e.first == v || e.second == v; });
    return FiniteGraph::from_parts(std::move(verts), std::move(edges), isolated);
}

FiniteGraph graph_from_terse(const std::string& text) {
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\n')) token.erase(0, 1);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\n')) token.pop_back();
        if (!token.empty()) {
            std::size_t dash = token.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("terse edge must look like u-v: " + token);
            edges.emplace_back(std::stoi(token.substr(0, dash)),
                               std::stoi(token.substr(dash + 1)));
        }
        pos = comma + 1;
    }
    return FiniteGraph::from_edges(std::move(edges));
}

ToothFn tooth_from_json(const json& j) {
    std::vector<int> prefix;
    if (j.contains("prefix"))
        for (const auto& v : j.at("prefix")) prefix.push_back(v.get<int>());
    if (!j.contains("tail")) throw std::invalid_argument("tooth function needs a tail");
    const auto& t = j.at("tail");
    const std::string kind = t.at("kind").get<std::string>();
    if (kind == "periodic") {
        std::vector<int> cycle;
        for (const auto& v : t.at("cycle")) cycle.push_back(v.get<int>());
        return ToothFn(std::move(prefix), PeriodicTail{std::move(cycle)});
    }
    if (kind == "arithmetic")
        return ToothFn(std::move(prefix),
                       ArithmeticTail{t.at("start").get<int>(), t.at("step").get<int>()});
    throw std::invalid_argument("unknown tail kind: " + kind);
}

HubGraph hub_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Edge> hub_edges = edge_array(j, "hub_edges");
    std::vector<HubGraph::LeafClass> classes;
    for (const auto& cls : j.at("classes")) {
        Signature sig;
        for (const auto& b : cls.at("sig")) sig.push_back(b.get<int>() ? 1 : 0);
        const auto& count = cls.at("count");
        Cardinal c = count.is_string() && count.get<std::string>() == "inf"
                         ? Cardinal::inf()
                         : Cardinal::of(count.get<int>());
        classes.push_back({std::move(sig), c});
    }
    return HubGraph(n, std::move(hub_edges), std::move(classes));
}

SymbolicGraph symbolic_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "ray") return SymbolicGraph::ray();
    if (family == "doubleray") return SymbolicGraph::double_ray();
    if (family == "kray") return SymbolicGraph::k_ray(j.at("k").get<int>());
    if (family == "star") return SymbolicGraph::star();
    if (family == "kinf") return SymbolicGraph::complete_infinite();
    if (family == "comb") return SymbolicGraph::comb(tooth_from_json(j));
    if (family == "matching") return SymbolicGraph::matching_graph(j.at("n").get<int>());
    if (family == "hub") return SymbolicGraph::hub(hub_from_json(j));
    if (family == "union")
        return SymbolicGraph::union_copies(j.at("n").get<int>(),
                                           symbolic_from_json(j.at("of")));
    throw std::invalid_argument("unknown family: " + family);
}

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
    return out;
}

json graph_json(const FiniteGraph& g) {
    return json{{"vertices", g.vertices()}, {"edges", edges_to_json(g.edges())}};
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

FiniteGraph parse_graph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(must_parse(text));
    return graph_from_terse(text);
}

PointedGraph parse_pointed_graph(const std::string& text) {
    json j = must_parse(text);
    if (!j.contains("basepoint"))
        throw std::invalid_argument("pointed graph needs a basepoint");
    return PointedGraph(graph_from_json(j), j.at("basepoint").get<int>());
}

SymbolicGraph parse_symbolic_graph(const std::string& text) {
    return symbolic_from_json(must_parse(text));
}

ToothFn parse_tooth_fn(const std::string& text) {
    json j = must_parse(text);
    if (j.contains("family")) {
        if (j.at("family").get<std::string>() != "comb")
            throw std::invalid_argument("expected a comb family object");
        return tooth_from_json(j);
    }
    return tooth_from_json(j);
}

HubGraph parse_hub_graph(const std::string& text) { return hub_from_json(must_parse(text)); }

Coloring parse_coloring(const std::string& text) {
    json j = must_parse(text);
    return Coloring::from_edge_sets(edge_array(j, "red"), edge_array(j, "blue"));
}

std::string graph_to_json(const FiniteGraph& g, int indent) {
    return dump(graph_json(g), indent);
}

std::string pointed_graph_to_json(const PointedGraph& g, int indent) {
    json j = graph_json(g.graph);
    j["basepoint"] = g.basepoint;
    return dump(j, indent);
}

std::string coloring_to_json(const Coloring& c, int indent) {
    return dump(json{{"red", edges_to_json(c.edges_of(Color::Red))},
                     {"blue", edges_to_json(c.edges_of(Color::Blue))}},
                indent);
}

std::string embedding_to_json(const EmbeddingMap& m, int indent) {
    json map = json::array();
    for (const auto& [p, h] : m.assignment) map.push_back(json::array({p, h}));
    return dump(json{{"map", map}, {"pointed", m.pointed}}, indent);
}

std::string hub_graph_to_json(const HubGraph& g, int indent) {
    json classes = json::array();
    for (const auto& cls : g.leaf_classes()) {
        json sig = json::array();
        for (auto b : cls.signature) sig.push_back(static_cast<int>(b));
        classes.push_back(json{{"sig", sig},
                               {"count", cls.count.infinite ? json("inf") : json(cls.count.value)}});
    }
    return dump(json{{"n", g.hub_count()},
                     {"hub_edges", edges_to_json(g.hub_edges())},
                     {"classes", classes}},
                indent);
}

std::string tooth_fn_to_json(const ToothFn& fn, int indent) {
    json tail;
    if (const auto* p = std::get_if<PeriodicTail>(&fn.tail()))
        tail = json{{"kind", "periodic"}, {"cycle", p->cycle}};
    else {
        const auto& a = std::get<ArithmeticTail>(fn.tail());
        tail = json{{"kind", "arithmetic"}, {"start", a.start}, {"step", a.step}};
    }
    return dump(json{{"prefix", fn.prefix()}, {"tail", tail}}, indent);
}

std::string verdict_to_json(const ArrowingVerdict& v, int indent) {
    json j{{"arrows", v.arrows}};
    if (v.good_coloring)
        j["witness"] = json::parse(coloring_to_json(*v.good_coloring));
    if (!v.certificate.empty()) {
        json cert = json::array();
        for (const auto& w : v.certificate)
            cert.push_back(json{{"color", w.color == Color::Red ? "red" : "blue"},
                                {"edges", edges_to_json(w.edges)}});
        j["certificate"] = cert;
    }
    return dump(j, indent);
}

std::string family_report_to_json(const FamilyConditionReport& r, int indent) {
    json cond2_cex = json::array();
    for (const auto& g : r.cond2_counterexamples) cond2_cex.push_back(graph_json(g));
    json violations = json::array();
    for (const auto& [i, j2] : r.cond3_violations) violations.push_back(json::array({i, j2}));
    json j{
        {"condition1", json{{"all_arrow", r.cond1_all_arrow}, {"failures", r.cond1_failures}}},
        {"condition2", json{{"holds_within_bounds", r.cond2_within_bounds},
                            {"max_vertices", r.max_vertices},
                            {"max_edges", r.max_edges},
                            {"counterexamples", cond2_cex},
                            {"note", r.cond2_note}}},
        {"condition3", json{{"antichain", r.cond3_antichain},
                            {"vacuous", r.cond3_vacuous},
                            {"violations", violations}}},
    };
    return dump(j, indent);
}

std::string transfer_report_to_json(const TransferReport& r, int indent) {
    auto entries = [](const std::vector<TransferReport::Entry>& list) {
        json out = json::array();
        for (const auto& e : list)
            out.push_back(json{{"graph", graph_json(e.subgraph)},
                               {"basepoint", e.basepoint},
                               {"arrows", e.arrows}});
        return out;
    };
    json j{{"hypothesis", entries(r.hypothesis)},
           {"conclusion", entries(r.conclusion)},
           {"all_hypothesis_pass", r.all_hypothesis_pass},
           {"all_conclusion_pass", r.all_conclusion_pass},
           {"cap", r.cap},
           {"cap_reached", r.cap_reached},
           {"depth", r.depth},
           {"slack", r.slack},
           {"warnings", r.warnings}};
    return dump(j, indent);
}

std::string graph_to_dot(const FiniteGraph& g) {
    std::string out = "graph G {\n";
    for (int v : g.vertices())
        if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace ramsey
