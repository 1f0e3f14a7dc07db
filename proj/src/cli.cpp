#include "edgedel/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "edgedel/exact.hpp"
#include "edgedel/forbidden.hpp"
#include "edgedel/graph_io.hpp"
#include "edgedel/kernelize.hpp"
#include "edgedel/reductions.hpp"
#include "edgedel/vc_solver.hpp"

namespace edgedel::cli {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

std::vector<Edge> parse_edge_list(const std::string& list_text) {
    std::vector<Edge> out;
    std::stringstream groups(list_text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::istringstream pair(group);
        long long u, v;
        if (!(pair >> u >> v)) throw std::invalid_argument("bad --delete entry: \"" + group + "\"");
        std::string rest;
        if (pair >> rest) throw std::invalid_argument("bad --delete entry: \"" + group + "\"");
        out.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    }
    return out;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : edges) arr.push_back({e.u, e.v});
    return arr;
}

ordered_json components_json(const std::vector<std::vector<Vertex>>& comps) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : comps) arr.push_back(c);
    return arr;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string out;
    for (const auto& a : args) {
        if (!out.empty()) out += ' ';
        out += a;
    }
    return out;
}

std::string dot_export(const Graph& g, const std::vector<Edge>& deleted) {
    std::vector<Edge> del = deleted;
    std::sort(del.begin(), del.end());
    std::ostringstream os;
    os << "graph edgedel {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const auto& e : g.edges()) {
        os << "  " << e.u << " -- " << e.v;
        if (std::binary_search(del.begin(), del.end(), e)) os << " [color=red,style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

/// Re-tags a graph loaded from disk using the layout file written by
/// generate-hs, so flower families stay checkable across the file boundary.
void apply_flower_layout(Graph& g, const std::string& layout_text) {
    ordered_json j = ordered_json::parse(layout_text);
    auto tag = std::make_shared<FlowerHostTag>();
    tag->center = j.at("center").get<Vertex>();
    for (const auto& p : j.at("petals")) {
        int length = p.at("length").get<int>();
        Vertex first = p.at("first_internal").get<Vertex>();
        int count = p.at("internal_count").get<int>();
        std::vector<Edge> petal_edges;
        Vertex prev = tag->center;
        for (int i = 0; i < count; ++i) {
            petal_edges.push_back(make_edge(prev, first + i));
            prev = first + i;
        }
        petal_edges.push_back(make_edge(prev, tag->center));
        std::sort(petal_edges.begin(), petal_edges.end());
        tag->petals.push_back({length, std::move(petal_edges)});
    }
    g.set_flower_tag(std::move(tag));
}

struct SolveOptions {
    std::string graph_path;
    int h = 1;
    std::optional<int> k;
    std::string engine = "vc";
    std::string dot_path;
};

int run_solve(const SolveOptions& opt, const std::vector<std::string>& args, bool json, bool quiet,
              std::ostream& out) {
    Graph g = read_graph(slurp(opt.graph_path));
    const int k_eff = opt.k ? *opt.k : g.edge_count();
    KernelResult kernel = kernelize(g, k_eff, opt.h);

    ordered_json report;
    report["command"] = join_args(args);
    report["engine"] = opt.engine;
    report["h"] = opt.h;
    if (opt.k) report["k"] = *opt.k; else report["k"] = nullptr;

    ordered_json stats;
    stats["removed_components"] = static_cast<int>(kernel.removed_components.size());
    stats["reduced_vertices"] = kernel.reduced.vertex_count();
    stats["reduced_edges"] = kernel.reduced.edge_count();

    std::optional<int> k_min;
    std::vector<Edge> witness;
    std::string verdict = "engine";

    if (opt.k && kernel.verdict == KernelResult::Verdict::no_by_bounds) {
        verdict = "no_by_bounds";
    } else if (kernel.reduced.edge_count() == 0) {
        verdict = "kernel_empty";
        k_min = 0;
    } else if (opt.engine == "vc") {
        VcSolveReport vc = solve_vc_report(kernel.reduced, opt.h);
        stats["partitions_tried"] = vc.partitions_tried;
        stats["best_partition"] = vc.best_partition_rgs;
        stats["objective"] = vc.objective;
        stats["cover_size"] = vc.cover_size;
        k_min = vc.solution.size();
        witness = vc.solution.deleted_edges;
    } else if (opt.engine == "branch") {
        BranchStats bs;
        const int cap = std::min(k_eff, kernel.reduced.edge_count());
        for (int kk = 0; kk <= cap; ++kk) {
            auto sol = branch_cap(kernel.reduced, opt.h, kk, &bs);
            if (sol) {
                k_min = kk;
                witness = sol->deleted_edges;
                break;
            }
        }
        stats["nodes_expanded"] = bs.nodes_expanded;
    } else {  // brute
        OracleStats os;
        auto sol = brute_force_min(kernel.reduced, ForbiddenFamily::all_trees(opt.h + 1),
                                   std::min(k_eff, kernel.reduced.edge_count()), &os);
        stats["candidates_checked"] = os.candidates_checked;
        if (sol) {
            k_min = sol->size();
            witness = sol->deleted_edges;
        }
    }

    bool yes = k_min && (!opt.k || *k_min <= *opt.k);
    if (yes) {
        // map back to original vertex ids and check the witness in-process
        Solution mapped;
        for (const auto& e : witness)
            mapped.deleted_edges.push_back(
                make_edge(kernel.vertex_map[e.u], kernel.vertex_map[e.v]));
        std::sort(mapped.deleted_edges.begin(), mapped.deleted_edges.end());
        if (!verify(g, mapped, ForbiddenFamily::all_trees(opt.h + 1)))
            throw std::logic_error("internal error: witness failed verification");
        report["answer"] = "yes";
        report["k_min"] = *k_min;
        report["deleted_edges"] = edges_json(mapped.deleted_edges);
        if (!opt.dot_path.empty()) spill(opt.dot_path, dot_export(g, mapped.deleted_edges));
    } else {
        report["answer"] = "no";
        if (!opt.dot_path.empty()) spill(opt.dot_path, dot_export(g, {}));
    }
    report["verdict"] = verdict;
    report["stats"] = stats;

    if (json) {
        out << report.dump(2) << '\n';
    } else if (!quiet) {
        out << "answer: " << report["answer"].get<std::string>() << '\n';
        if (yes) out << "k_min: " << *k_min << '\n';
        out << "verdict: " << verdict << '\n';
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"edge-deletion solvers for component-capped graphs"};
    app.require_subcommand(1);
    // --h is a domain flag, so help must not claim -h
    app.set_help_flag("--help", "print help");
    bool json = false, quiet = false;
    int seed = 0;
    app.add_flag("--json", json, "emit one JSON document on stdout");
    app.add_flag("--quiet", quiet, "suppress human-readable output");
    app.add_option("--seed", seed, "reserved for random-instance test helpers")->group("");

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "minimize deletions for the component cap");
    solve->set_help_flag("--help", "print help");
    solve->add_option("--graph", solve_opt.graph_path, "graph file")->required();
    solve->add_option("--h", solve_opt.h, "component size cap")->required()->check(CLI::PositiveNumber);
    int solve_k = -1;
    auto* solve_k_opt = solve->add_option("--k", solve_k, "budget (absent: report the minimum)")
                            ->check(CLI::NonNegativeNumber);
    solve->add_option("--engine", solve_opt.engine, "vc | branch | brute")
        ->check(CLI::IsMember({"vc", "branch", "brute"}));
    solve->add_option("--dot", solve_opt.dot_path, "write a DOT rendering of the witness");

    std::string kern_graph;
    int kern_k = 0, kern_h = 1;
    std::string kern_out;
    auto* kern = app.add_subcommand("kernelize", "apply the component-removal reduction");
    kern->set_help_flag("--help", "print help");
    kern->add_option("--graph", kern_graph)->required();
    kern->add_option("--k", kern_k)->required()->check(CLI::NonNegativeNumber);
    kern->add_option("--h", kern_h)->required()->check(CLI::PositiveNumber);
    kern->add_option("--out", kern_out, "write the reduced graph here");

    std::string oracle_graph, oracle_family;
    int oracle_k = -1;
    auto* oracle = app.add_subcommand("oracle", "exhaustive minimum search");
    oracle->set_help_flag("--help", "print help");
    oracle->add_option("--graph", oracle_graph)->required();
    oracle->add_option("--family", oracle_family, "family JSON file")->required();
    auto* oracle_k_opt = oracle->add_option("--k", oracle_k, "largest size tried (default: all edges)")
                             ->check(CLI::NonNegativeNumber);
    std::string oracle_layout;
    oracle->add_option("--layout", oracle_layout, "flower layout JSON (for flower families)");

    std::string verify_graph, verify_family, verify_delete, verify_layout;
    auto* verify_cmd = app.add_subcommand("verify", "check a deletion set against a family");
    verify_cmd->set_help_flag("--help", "print help");
    verify_cmd->add_option("--graph", verify_graph)->required();
    verify_cmd->add_option("--family", verify_family)->required();
    verify_cmd->add_option("--delete", verify_delete, "edges \"u v;u v;...\" (empty: no deletions)");
    verify_cmd->add_option("--layout", verify_layout, "flower layout JSON (for flower families)");

    std::string mmo_graph, mmo_out;
    int mmo_r = 3;
    auto* genmmo = app.add_subcommand("generate-mmo", "orientation-hardness host");
    genmmo->set_help_flag("--help", "print help");
    genmmo->add_option("--graph", mmo_graph, "weighted graph file")->required();
    genmmo->add_option("--r", mmo_r, "outdegree bound (>= 3)")->required();
    genmmo->add_option("--out", mmo_out, "prefix for .graph.txt/.family.json/.layout.json");

    int hs_universe = 0, hs_k = 0;
    std::string hs_sets, hs_out;
    auto* genhs = app.add_subcommand("generate-hs", "hitting-set flower host");
    genhs->set_help_flag("--help", "print help");
    genhs->add_option("--universe", hs_universe)->required()->check(CLI::NonNegativeNumber);
    genhs->add_option("--sets", hs_sets, "JSON array of sets, e.g. [[1,2],[2,3]]")->required();
    genhs->add_option("--k", hs_k)->required()->check(CLI::NonNegativeNumber);
    genhs->add_option("--out", hs_out, "prefix for .graph.txt/.family.json/.layout.json");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "edgedel");
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*solve) {
            if (solve_k_opt->count()) solve_opt.k = solve_k;
            return run_solve(solve_opt, args, json, quiet, out);
        }
        if (*kern) {
            Graph g = read_graph(slurp(kern_graph));
            KernelResult res = kernelize(g, kern_k, kern_h);
            const std::string reduced_text = write_graph(res.reduced);
            if (!kern_out.empty()) spill(kern_out, reduced_text);
            ordered_json j;
            j["command"] = join_args(args);
            j["removed"] = components_json(res.removed_components);
            j["verdict"] = res.verdict == KernelResult::Verdict::open ? "open" : "no_by_bounds";
            j["vertex_map"] = res.vertex_map;
            j["reduced_graph"] = reduced_text;
            if (json) out << j.dump(2) << '\n';
            else if (!quiet) {
                out << "removed components: " << res.removed_components.size() << '\n'
                    << "verdict: " << j["verdict"].get<std::string>() << '\n'
                    << reduced_text;
            }
            return 0;
        }
        if (*oracle) {
            Graph g = read_graph(slurp(oracle_graph));
            if (!oracle_layout.empty()) apply_flower_layout(g, slurp(oracle_layout));
            ForbiddenFamily fam = family_from_json(slurp(oracle_family));
            const int k_max = oracle_k_opt->count() ? oracle_k : g.edge_count();
            OracleStats os;
            auto sol = brute_force_min(g, fam, k_max, &os);
            ordered_json j;
            j["command"] = join_args(args);
            j["answer"] = sol ? "yes" : "no";
            if (sol) {
                j["k_min"] = sol->size();
                j["deleted_edges"] = edges_json(sol->deleted_edges);
            }
            j["stats"] = {{"nodes_expanded", os.candidates_checked}};
            if (json) out << j.dump(2) << '\n';
            else if (!quiet)
                out << "answer: " << j["answer"].get<std::string>()
                    << (sol ? " (k_min " + std::to_string(sol->size()) + ")" : "") << '\n';
            return 0;
        }
        if (*verify_cmd) {
            Graph g = read_graph(slurp(verify_graph));
            if (!verify_layout.empty()) apply_flower_layout(g, slurp(verify_layout));
            ForbiddenFamily fam = family_from_json(slurp(verify_family));
            Solution sol;
            sol.deleted_edges = parse_edge_list(verify_delete);
            std::sort(sol.deleted_edges.begin(), sol.deleted_edges.end());
            bool ok = verify(g, sol, fam);
            ordered_json j;
            j["command"] = join_args(args);
            j["valid"] = ok;
            if (json) out << j.dump(2) << '\n';
            else if (!quiet) out << (ok ? "valid" : "invalid") << '\n';
            return 0;
        }
        if (*genmmo) {
            WeightedGraph wg = read_weighted(slurp(mmo_graph));
            MmoReduction red = gen_mmo({wg, mmo_r});
            ordered_json j;
            j["command"] = join_args(args);
            j["n"] = red.layout.input_vertex_count;
            j["omega"] = red.layout.omega;
            j["N"] = red.layout.path_unit;
            j["delta_w"] = red.layout.max_weighted_degree;
            j["k"] = red.budget;
            j["star"] = red.layout.star_degree;
            j["cycle"] = red.layout.cycle_length;
            j["vertices"] = red.graph.vertex_count();
            j["edges"] = red.graph.edge_count();
            if (!mmo_out.empty()) {
                ordered_json layout;
                layout["input_vertex_count"] = red.layout.input_vertex_count;
                layout["omega"] = red.layout.omega;
                layout["N"] = red.layout.path_unit;
                layout["max_weighted_degree"] = red.layout.max_weighted_degree;
                layout["star_degree"] = red.layout.star_degree;
                layout["cycle_length"] = red.layout.cycle_length;
                layout["budget"] = red.budget;
                layout["pendants"] = ordered_json::array();
                for (Vertex u = 0; u < red.layout.input_vertex_count; ++u)
                    layout["pendants"].push_back({{"vertex", u},
                                                  {"first", red.layout.pendants[u].first},
                                                  {"count", red.layout.pendants[u].second}});
                layout["gadgets"] = ordered_json::array();
                for (const auto& gd : red.layout.gadgets) {
                    auto runs = [](const std::vector<PathRun>& rs) {
                        ordered_json a = ordered_json::array();
                        for (const auto& r : rs)
                            a.push_back({{"from", r.from},
                                         {"to", r.to},
                                         {"first_internal", r.first_internal},
                                         {"internal_count", r.internal_count}});
                        return a;
                    };
                    layout["gadgets"].push_back({{"edge", {gd.input_edge.u, gd.input_edge.v}},
                                                 {"weight", gd.weight},
                                                 {"set_uv", gd.set_uv},
                                                 {"set_uv_prime", gd.set_uv_prime},
                                                 {"set_vu", gd.set_vu},
                                                 {"set_vu_prime", gd.set_vu_prime},
                                                 {"red_paths", runs(gd.red_paths)},
                                                 {"blue_paths", runs(gd.blue_paths)}});
                }
                spill(mmo_out + ".graph.txt", write_graph(red.graph));
                spill(mmo_out + ".family.json", family_to_json(red.family));
                spill(mmo_out + ".layout.json", layout.dump(2));
                j["files"] = {{"graph", mmo_out + ".graph.txt"},
                              {"family", mmo_out + ".family.json"},
                              {"layout", mmo_out + ".layout.json"}};
            }
            if (json) out << j.dump(2) << '\n';
            else if (!quiet)
                out << "host: " << red.graph.vertex_count() << " vertices, "
                    << red.graph.edge_count() << " edges, k=" << red.budget << '\n';
            return 0;
        }
        if (*genhs) {
            ordered_json sets_json = ordered_json::parse(hs_sets);
            HsInstance inst;
            inst.universe = hs_universe;
            inst.k = hs_k;
            for (const auto& s : sets_json) inst.sets.push_back(s.get<std::vector<int>>());
            HsReduction red = gen_hs(inst);
            ordered_json j;
            j["command"] = join_args(args);
            j["k"] = red.budget;
            j["vertices"] = red.graph.vertex_count();
            j["edges"] = red.graph.edge_count();
            if (!hs_out.empty()) {
                ordered_json layout;
                layout["center"] = red.center;
                layout["petals"] = ordered_json::array();
                for (const auto& p : red.petals)
                    layout["petals"].push_back({{"element", p.element},
                                                {"length", p.length},
                                                {"first_internal", p.first_internal},
                                                {"internal_count", p.internal_count}});
                spill(hs_out + ".graph.txt", write_graph(red.graph));
                spill(hs_out + ".family.json", family_to_json(red.family));
                spill(hs_out + ".layout.json", layout.dump(2));
                j["files"] = {{"graph", hs_out + ".graph.txt"},
                              {"family", hs_out + ".family.json"},
                              {"layout", hs_out + ".layout.json"}};
            }
            if (json) out << j.dump(2) << '\n';
            else if (!quiet)
                out << "host: " << red.graph.vertex_count() << " vertices, "
                    << red.graph.edge_count() << " edges, k=" << red.budget << '\n';
            return 0;
        }
    } catch (const GuardError& e) {
        err << "guard exceeded: " << e.what() << '\n';
        return 3;
    } catch (const nlohmann::json::exception& e) {
        err << "bad JSON input: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace edgedel::cli
