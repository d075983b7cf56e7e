#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/arrowing.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/hubgraph.hpp"
#include "ramsey/io.hpp"
#include "ramsey/konig.hpp"
#include "ramsey/selfembed.hpp"

namespace ramsey::cli {

namespace {

using nlohmann::json;

// Arguments name either a file or inline content; inline literals keep
// one-off invocations scriptable without temp files.
std::string load(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

struct RunConfig {
    std::string format = "text";
    bool witness = false;
    bool certify = false;
    int depth = 1;
    int cap = 8;
    int max_v = 1, max_e = 1;
    int n = 2;
    int len = 1;
    int slack = 0;
    int subgraph_cap = 200;
    int max_level = -1;
    bool emit_embedding = false;  // comb check --depth was given explicitly
    int threads = 1;  // reserved; the engine is deterministic either way
    // bound as plain strings so CLI11 leaves inline JSON literals alone
    std::string in_a, in_b, in_c;
    std::vector<std::string> family;
};

int semantic(bool truth) { return truth ? 0 : 1; }

void emit_graph(const FiniteGraph& g, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "dot")
        out << graph_to_dot(g);
    else
        out << graph_to_json(g, cfg.format == "json" ? -1 : 2) << "\n";
}

int cmd_arrow(const RunConfig& cfg, std::ostream& out) {
    auto f = parse_graph(load(cfg.in_a));
    auto g = parse_graph(load(cfg.in_b));
    auto h = parse_graph(load(cfg.in_c));
    auto verdict = arrows(f, g, h, {.certify = cfg.certify});
    if (cfg.format == "json") {
        out << verdict_to_json(verdict) << "\n";
    } else {
        out << "arrows: " << (verdict.arrows ? "true" : "false") << "\n";
        if (cfg.witness && verdict.good_coloring)
            out << coloring_to_json(*verdict.good_coloring) << "\n";
        if (cfg.certify && !verdict.certificate.empty())
            out << "certificate size: " << verdict.certificate.size() << "\n";
    }
    return semantic(verdict.arrows);
}

int cmd_minimal(const RunConfig& cfg, std::ostream& out) {
    auto f = parse_graph(load(cfg.in_a));
    auto g = parse_graph(load(cfg.in_b));
    auto h = parse_graph(load(cfg.in_c));
    bool minimal = is_minimal(f, g, h);
    if (cfg.format == "json")
        out << json{{"minimal", minimal}}.dump() << "\n";
    else
        out << "minimal: " << (minimal ? "true" : "false") << "\n";
    return semantic(minimal);
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    auto g = parse_graph(load(cfg.in_a));
    auto h = parse_graph(load(cfg.in_b));
    auto list = enumerate_minimal(g, h, cfg.max_v, cfg.max_e);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& f : list) arr.push_back(json::parse(graph_to_json(f)));
        out << json{{"count", list.size()}, {"graphs", arr}}.dump() << "\n";
    } else {
        out << "minimal graphs within bounds: " << list.size() << "\n";
        for (const auto& f : list) out << graph_to_json(f) << "\n";
    }
    return 0;
}

int cmd_family_check(const RunConfig& cfg, std::ostream& out) {
    auto g = parse_graph(load(cfg.in_a));
    auto h = parse_graph(load(cfg.in_b));
    std::vector<FiniteGraph> family;
    for (const auto& path : cfg.family) family.push_back(parse_graph(load(path)));
    auto report = check_family_conditions(family, g, h, cfg.max_v, cfg.max_e);
    if (cfg.format == "json") {
        out << family_report_to_json(report) << "\n";
    } else {
        out << "condition 1 (every member arrows): "
            << (report.cond1_all_arrow ? "holds" : "fails") << "\n";
        out << "condition 2 (arrowing graphs contain a member, bounded evidence): "
            << (report.cond2_within_bounds ? "holds within bounds" : "fails within bounds")
            << "\n";
        out << "condition 3 (antichain): "
            << (report.cond3_vacuous ? "vacuous"
                                     : (report.cond3_antichain ? "holds" : "fails"))
            << "\n";
    }
    return semantic(report.cond1_all_arrow && report.cond2_within_bounds &&
                    report.cond3_antichain);
}

int cmd_comb_check(const RunConfig& cfg, std::ostream& out) {
    auto fn = parse_tooth_fn(load(cfg.in_a));
    auto verdict = comb_self_embeddable(fn);
    std::optional<std::string> embedding_json;
    if (verdict.self_embeddable && cfg.emit_embedding) {
        auto map = comb_translation_embedding(*verdict.tooth, *verdict.shift, cfg.depth);
        embedding_json = embedding_to_json(map);
    }
    if (cfg.format == "json") {
        json j{{"self_embeddable", verdict.self_embeddable},
               {"normalized", verdict.normalized},
               {"s", verdict.s_value},
               {"p_max", verdict.p_max}};
        if (verdict.shift) j["shift"] = *verdict.shift;
        if (embedding_json) j["embedding"] = json::parse(*embedding_json);
        if (!verdict.violations.empty()) {
            json v = json::array();
            for (auto [p, n] : verdict.violations) v.push_back(json::array({p, n}));
            j["violations"] = v;
        }
        out << j.dump() << "\n";
    } else {
        out << "self-embeddable: " << (verdict.self_embeddable ? "true" : "false") << "\n";
        if (verdict.shift) out << "shift: " << *verdict.shift << "\n";
        if (verdict.normalized) out << "normalized: true\n";
        if (embedding_json) out << *embedding_json << "\n";
    }
    return semantic(verdict.self_embeddable);
}

int cmd_comb_normalize(const RunConfig& cfg, std::ostream& out) {
    auto fn = parse_tooth_fn(load(cfg.in_a));
    out << tooth_fn_to_json(normalize_comb(fn)) << "\n";
    return 0;
}

int cmd_hub_member(const RunConfig& cfg, std::ostream& out) {
    auto g = parse_hub_graph(load(cfg.in_a));
    bool member = is_family_member(g);
    if (cfg.format == "json")
        out << json{{"member", member}}.dump() << "\n";
    else
        out << "member: " << (member ? "true" : "false") << "\n";
    return semantic(member);
}

int cmd_hub_selfembed(const RunConfig& cfg, std::ostream& out) {
    auto g = parse_hub_graph(load(cfg.in_a));
    auto map = construct_self_embedding(g, cfg.depth);
    out << embedding_to_json(map) << "\n";
    return 0;
}

int cmd_hub_bluematch(const RunConfig& cfg, std::ostream& out) {
    auto f = parse_graph(load(cfg.in_a));
    auto c = parse_coloring(load(cfg.in_b));
    auto result = blue_matching_vertex_set(f, c, cfg.n);
    if (cfg.format == "json") {
        json j{{"ok", result.ok()}};
        if (result.ok()) {
            j["vertices"] = result.vertices;
            j["iterations"] = result.iterations;
        } else {
            json m = json::array();
            for (const auto& [u, v] : *result.blue_matching) m.push_back(json::array({u, v}));
            j["blue_matching"] = m;
        }
        out << j.dump() << "\n";
    } else if (result.ok()) {
        out << "vertices:";
        for (int v : result.vertices) out << " " << v;
        out << "\niterations: " << result.iterations << "\n";
    } else {
        out << "blue matching of size " << result.blue_matching->size() << " found\n";
    }
    return semantic(result.ok());
}

int cmd_compact(const RunConfig& cfg, std::ostream& out) {
    auto f = parse_symbolic_graph(load(cfg.in_a));
    auto g = parse_graph(load(cfg.in_b));
    auto h = parse_graph(load(cfg.in_c));
    auto result = finite_arrowing_subgraph(f, g, h, cfg.cap);
    if (cfg.format == "json") {
        json j{{"found", result.has_value()}, {"cap", cfg.cap}};
        if (result) {
            j["depth"] = result->depth;
            j["truncation"] = json::parse(graph_to_json(result->truncation));
        }
        out << j.dump() << "\n";
    } else if (result) {
        out << "arrowing truncation at depth " << result->depth << "\n";
        out << graph_to_json(result->truncation) << "\n";
    } else {
        out << "inconclusive up to depth " << cfg.cap << "\n";
    }
    return semantic(result.has_value());
}

int cmd_konig_levels(const RunConfig& cfg, std::ostream& out) {
    auto pattern = parse_pointed_graph(load(cfg.in_a));
    auto host = parse_pointed_graph(load(cfg.in_b));
    int top = cfg.max_level >= 0 ? cfg.max_level
                                 : static_cast<int>(pattern.graph.vertex_count()) - 1;
    auto sets = build_level_sets(pattern, host, top);
    json sizes = json::array();
    for (auto s : sets.sizes()) sizes.push_back(s);
    json j{{"sizes", sizes}};
    if (top == static_cast<int>(pattern.graph.vertex_count()) - 1) {
        auto m = stitch_embedding(sets);
        j["embedding_found"] = m.has_value();
        if (m) j["embedding"] = json::parse(embedding_to_json(*m));
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_konig_ray(const RunConfig& cfg, std::ostream& out) {
    auto host = parse_symbolic_graph(load(cfg.in_a));
    auto m = ray_prefix_search(host, cfg.len, cfg.depth);
    if (cfg.format == "json") {
        json j{{"found", m.has_value()}};
        if (m) j["embedding"] = json::parse(embedding_to_json(*m));
        out << j.dump() << "\n";
    } else if (m) {
        out << "ray prefix found\n" << embedding_to_json(*m) << "\n";
    } else {
        out << "no ray prefix of that length\n";
    }
    return semantic(m.has_value());
}

int cmd_konig_transfer(const RunConfig& cfg, std::ostream& out) {
    auto f = parse_symbolic_graph(load(cfg.in_a));
    const std::string g_text = load(cfg.in_b);
    auto h = parse_graph(load(cfg.in_c));
    // G may be symbolic or a concrete pointed graph.
    TransferReport report = [&] {
        json j = json::parse(g_text, nullptr, false);
        if (!j.is_discarded() && j.contains("family"))
            return bounded_pointed_arrowing_transfer(f, parse_symbolic_graph(g_text), h,
                                                     cfg.depth, cfg.slack, cfg.subgraph_cap);
        return bounded_pointed_arrowing_transfer(f, parse_pointed_graph(g_text), h, cfg.depth,
                                                 cfg.slack, cfg.subgraph_cap);
    }();
    out << transfer_report_to_json(report) << "\n";
    return semantic(report.all_hypothesis_pass && report.all_conclusion_pass);
}

int cmd_truncate(const RunConfig& cfg, std::ostream& out) {
    auto family = parse_symbolic_graph(load(cfg.in_a));
    FiniteGraph g = family.family() == SymbolicGraph::Family::Hub
                        ? hub_truncate(family.hub_graph(), cfg.depth)
                        : truncate(family, cfg.depth);
    emit_graph(g, cfg, out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("RAMSEY_THREADS")) cfg.threads = std::atoi(env);

    CLI::App app{"Ramsey arrowing, minimality and self-embeddability toolkit"};
    app.require_subcommand(1);
    app.add_option("--threads", cfg.threads, "reserved for future parallelism")
        ->check(CLI::PositiveNumber);

    auto add_format = [&cfg](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
    };
    auto add_inputs = [&cfg](CLI::App* cmd, int count) {
        cmd->add_option("A", cfg.in_a)->required();
        if (count >= 2) cmd->add_option("B", cfg.in_b)->required();
        if (count >= 3) cmd->add_option("C", cfg.in_c)->required();
    };

    auto* arrow = app.add_subcommand("arrow", "decide F -> (G,H)");
    add_inputs(arrow, 3);
    arrow->add_flag("--witness", cfg.witness, "print a good coloring when F does not arrow");
    arrow->add_flag("--certify", cfg.certify, "record monochromatic witness sets");
    add_format(arrow);

    auto* minimal = app.add_subcommand("minimal", "decide (G,H)-minimality of F");
    add_inputs(minimal, 3);
    add_format(minimal);

    auto* enumerate = app.add_subcommand("enumerate", "list (G,H)-minimal graphs in bounds");
    add_inputs(enumerate, 2);
    enumerate->add_option("--max-v", cfg.max_v, "vertex bound")->required();
    enumerate->add_option("--max-e", cfg.max_e, "edge bound")->required();
    add_format(enumerate);

    auto* family = app.add_subcommand("family-check", "check the arrowing-family conditions");
    add_inputs(family, 2);
    family->add_option("--family", cfg.family, "family member graphs")->required();
    family->add_option("--max-v", cfg.max_v, "vertex bound")->required();
    family->add_option("--max-e", cfg.max_e, "edge bound")->required();
    add_format(family);

    auto* comb = app.add_subcommand("comb", "comb self-embeddability");
    auto* comb_check = comb->add_subcommand("check", "decide self-embeddability");
    comb_check->add_option("tooth", cfg.in_a, "tooth function")->required();
    comb_check->add_option("--depth", cfg.depth, "emit the verified truncation embedding");
    add_format(comb_check);
    auto* comb_norm = comb->add_subcommand("normalize", "apply the index-exchange rewrite");
    comb_norm->add_option("tooth", cfg.in_a, "tooth function")->required();

    auto* hub = app.add_subcommand("hub", "hub-graph family operations");
    auto* hub_member = hub->add_subcommand("member", "membership test");
    hub_member->add_option("hubgraph", cfg.in_a, "hub graph")->required();
    add_format(hub_member);
    auto* hub_se = hub->add_subcommand("selfembed", "pigeonhole self-embedding on truncations");
    hub_se->add_option("hubgraph", cfg.in_a, "hub graph")->required();
    hub_se->add_option("--depth", cfg.depth, "truncation depth")->required();
    auto* hub_bm = hub->add_subcommand("bluematch", "blue matching elimination loop");
    hub_bm->add_option("F", cfg.in_a, "graph")->required();
    hub_bm->add_option("C", cfg.in_b, "coloring")->required();
    hub_bm->add_option("--n", cfg.n, "matching size bound")->required();
    add_format(hub_bm);

    auto* compact = app.add_subcommand("compact", "least arrowing truncation");
    add_inputs(compact, 3);
    compact->add_option("--cap", cfg.cap, "depth cap")->required();
    add_format(compact);

    auto* konig = app.add_subcommand("konig", "level-set machinery");
    auto* levels = konig->add_subcommand("levels", "pointed embedding level sizes");
    levels->add_option("PATTERN", cfg.in_a)->required();
    levels->add_option("HOST", cfg.in_b)->required();
    levels->add_option("--max-level", cfg.max_level, "build only this many levels");
    auto* ray = konig->add_subcommand("ray", "ray prefix search");
    ray->add_option("HOST", cfg.in_a)->required();
    ray->add_option("--len", cfg.len, "prefix length")->required();
    ray->add_option("--depth", cfg.depth, "host truncation depth")->required();
    add_format(ray);
    auto* transfer = konig->add_subcommand("transfer", "bounded pointed-arrowing transfer");
    transfer->add_option("F", cfg.in_a)->required();
    transfer->add_option("G", cfg.in_b)->required();
    transfer->add_option("H", cfg.in_c)->required();
    transfer->add_option("--depth", cfg.depth, "subgraph enumeration depth")->required();
    transfer->add_option("--slack", cfg.slack, "extra depth on the F side");
    transfer->add_option("--cap", cfg.subgraph_cap, "subgraph enumeration cap");

    auto* trunc = app.add_subcommand("truncate", "finite truncation of a symbolic graph");
    trunc->add_option("FAMILY", cfg.in_a)->required();
    trunc->add_option("--depth", cfg.depth, "truncation depth")->required();
    add_format(trunc);

    auto* vectors = app.add_subcommand("vectors", "run a test-vector file");
    vectors->add_option("FILE", cfg.in_a)->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cfg.threads < 1) throw std::invalid_argument("--threads must be >= 1");
        if (app.got_subcommand(arrow)) return cmd_arrow(cfg, out);
        if (app.got_subcommand(minimal)) return cmd_minimal(cfg, out);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg, out);
        if (app.got_subcommand(family)) return cmd_family_check(cfg, out);
        if (app.got_subcommand(comb)) {
            if (comb->got_subcommand(comb_check)) {
                cfg.emit_embedding = comb_check->count("--depth") > 0;
                return cmd_comb_check(cfg, out);
            }
            if (comb->got_subcommand(comb_norm)) return cmd_comb_normalize(cfg, out);
            err << "error: comb requires a subcommand (check | normalize)\n";
            return 2;
        }
        if (app.got_subcommand(hub)) {
            if (hub->got_subcommand(hub_member)) return cmd_hub_member(cfg, out);
            if (hub->got_subcommand(hub_se)) return cmd_hub_selfembed(cfg, out);
            if (hub->got_subcommand(hub_bm)) return cmd_hub_bluematch(cfg, out);
            err << "error: hub requires a subcommand (member | selfembed | bluematch)\n";
            return 2;
        }
        if (app.got_subcommand(compact)) return cmd_compact(cfg, out);
        if (app.got_subcommand(konig)) {
            if (konig->got_subcommand(levels)) return cmd_konig_levels(cfg, out);
            if (konig->got_subcommand(ray)) return cmd_konig_ray(cfg, out);
            if (konig->got_subcommand(transfer)) return cmd_konig_transfer(cfg, out);
            err << "error: konig requires a subcommand (levels | ray | transfer)\n";
            return 2;
        }
        if (app.got_subcommand(trunc)) return cmd_truncate(cfg, out);
        if (app.got_subcommand(vectors)) return run_vectors(load(cfg.in_a), out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

int run_vectors(const std::string& json_text, std::ostream& out, std::ostream& err) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
        err << "error: vector file must be a JSON array\n";
        return 2;
    }
    int passed = 0, failed = 0;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& rec = doc[i];
        try {
            std::vector<std::string> cmd;
            for (const auto& a : rec.at("command")) cmd.push_back(a.get<std::string>());
            std::ostringstream sub_out, sub_err;
            int code = run(cmd, sub_out, sub_err);
            bool ok = true;
            std::string reason;
            if (rec.contains("expect_exit") && rec.at("expect_exit").get<int>() != code) {
                ok = false;
                reason = "exit code " + std::to_string(code) + " != expected " +
                         std::to_string(rec.at("expect_exit").get<int>());
            }
            if (ok && rec.contains("expect_contains")) {
                auto needle = rec.at("expect_contains").get<std::string>();
                if (sub_out.str().find(needle) == std::string::npos) {
                    ok = false;
                    reason = "output does not contain \"" + needle + "\"";
                }
            }
            if (ok && rec.contains("expect_output") &&
                rec.at("expect_output").get<std::string>() != sub_out.str()) {
                ok = false;
                reason = "output mismatch";
            }
            if (ok) {
                ++passed;
            } else {
                ++failed;
                out << "vector " << i << " failed: " << reason << "\n";
            }
        } catch (const std::exception& e) {
            ++failed;
            out << "vector " << i << " malformed: " << e.what() << "\n";
        }
    }
    out << "vectors: " << passed << " passed, " << failed << " failed, " << doc.size()
        << " total\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace ramsey::cli
