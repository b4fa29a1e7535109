#include "covers/constructions.hpp"
#include "covers/cover.hpp"
#include "covers/equivalence.hpp"
#include "covers/experiments.hpp"
#include "covers/graph.hpp"
#include "covers/refinement.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace covers;

struct GlobalOpts {
    std::string format = "json";
    std::uint64_t seed = 42;
    std::string out;
};

// All subcommand output goes to --out when given, else to stdout.
void write_output(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file: " + g.out);
    }
    f << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    f << text;
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open graph file: " + path);
    }
    try {
        return parse_graph(f);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string sidecar_json(const LabeledGraph& lg) {
    nlohmann::ordered_json j;
    j["root"] = lg.root;
    j["types"] = nlohmann::ordered_json::array();
    for (int code : lg.types) {
        j["types"].push_back(type_name(code));
    }
    j["levels"] = lg.levels;
    return j.dump(2) + "\n";
}

struct GenOpts {
    int n = 0;
    int s = 3;
    int t = 2;
    std::string sidecar;
};

void emit_labeled(const GlobalOpts& g, const GenOpts& o, const LabeledGraph& lg) {
    write_output(g, serialize_graph(lg.graph));
    if (!o.sidecar.empty()) {
        write_file(o.sidecar, sidecar_json(lg));
    }
}

int run_gen_theorem1(const GlobalOpts& g, const GenOpts& o) {
    if (g.out.empty()) {
        throw std::runtime_error(
            "gen theorem1 emits two graphs; pass --out PREFIX (writes PREFIX.g.graph "
            "and PREFIX.h.graph)");
    }
    const Theorem1Pair pair = construct_theorem1_pair(o.n);
    write_file(g.out + ".g.graph", serialize_graph(pair.g.graph));
    write_file(g.out + ".h.graph", serialize_graph(pair.h.graph));
    if (!o.sidecar.empty()) {
        write_file(o.sidecar + ".g.json", sidecar_json(pair.g));
        write_file(o.sidecar + ".h.json", sidecar_json(pair.h));
    }
    std::cerr << "t=" << pair.t << " s=" << pair.s << " k=" << pair.k << " l=" << pair.l
              << "\n";
    return 0;
}

std::string report_text(const GlobalOpts& g, const ExperimentReport& rep) {
    return g.format == "csv" ? rep.to_csv() : rep.to_json();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal-cover and color-refinement toolkit"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--format", global.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "random seed for experiment suites")
        ->capture_default_str();
    app.add_option("--out", global.out, "output path (default: stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate graphs");
    gen->require_subcommand(1);
    GenOpts gen_opts;
    auto* gen_path_cmd = gen->add_subcommand("path", "path graph P_n");
    gen_path_cmd->add_option("--n", gen_opts.n, "vertex count")->required();
    auto* gen_cycle_cmd = gen->add_subcommand("cycle", "cycle graph C_n");
    gen_cycle_cmd->add_option("--n", gen_opts.n, "vertex count")->required();
    auto* gen_gst = gen->add_subcommand("gst", "extremal graph G_{s,t}");
    auto* gen_hst = gen->add_subcommand("hst", "extremal graph H_{s,t}");
    for (auto* cmd : {gen_gst, gen_hst}) {
        cmd->add_option("--s", gen_opts.s, "path parameter (odd, >= 3)")->required();
        cmd->add_option("--t", gen_opts.t, "block count (>= 2)")->required();
        cmd->add_option("--sidecar", gen_opts.sidecar, "write root/types/levels JSON here");
    }
    auto* gen_thm1 = gen->add_subcommand("theorem1", "equal-size padded pair on n vertices");
    gen_thm1->add_option("--n", gen_opts.n, "vertex count (>= 40)")->required();
    gen_thm1->add_option("--sidecar", gen_opts.sidecar,
                         "sidecar prefix (writes PREFIX.g.json and PREFIX.h.json)");

    // refine
    auto* refine = app.add_subcommand("refine", "color refinement to stabilization");
    std::string refine_file;
    int refine_rounds_cap = -1;
    bool refine_history = false;
    refine->add_option("graph", refine_file, "graph file")->required();
    refine->add_option("--rounds", refine_rounds_cap, "cap on history rows shown");
    refine->add_flag("--history", refine_history, "print per-round class counts as CSV");

    // ucover
    auto* ucover = app.add_subcommand("ucover", "truncated universal-cover unfolding");
    std::string ucover_file;
    int ucover_root = 0, ucover_depth = 0;
    long long ucover_budget = kDefaultNodeBudget;
    bool ucover_canon = false;
    ucover->add_option("graph", ucover_file, "graph file")->required();
    ucover->add_option("--root", ucover_root, "root vertex")->required();
    ucover->add_option("--depth", ucover_depth, "truncation depth")->required();
    ucover->add_option("--budget", ucover_budget, "node budget")->capture_default_str();
    ucover->add_flag("--canon", ucover_canon, "also print the canonical form");

    // ucover-iso
    auto* uiso = app.add_subcommand("ucover-iso", "universal-cover isomorphism at two roots");
    std::string uiso_g, uiso_h;
    std::vector<int> uiso_roots;
    uiso->add_option("G", uiso_g, "first graph file")->required();
    uiso->add_option("H", uiso_h, "second graph file")->required();
    uiso->add_option("--roots", uiso_roots, "root in g, root in h")
        ->expected(2)
        ->required();

    // common-cover
    auto* common = app.add_subcommand("common-cover", "common finite cover decision");
    std::string common_g, common_h;
    common->add_option("G", common_g, "first graph file")->required();
    common->add_option("H", common_h, "second graph file")->required();

    // depth
    auto* depth = app.add_subcommand("depth", "distinguishing depth of a graph pair");
    std::string depth_g, depth_h, depth_mode = "bisim";
    std::vector<int> depth_roots;
    depth->add_option("G", depth_g, "first graph file")->required();
    depth->add_option("H", depth_h, "second graph file")->required();
    depth->add_option("--roots", depth_roots, "root pair for bisim mode")->expected(2);
    depth->add_option("--mode", depth_mode, "bisim | fo2c | bounds")
        ->check(CLI::IsMember({"bisim", "fo2c", "bounds"}))
        ->capture_default_str();

    // experiment
    auto* exp = app.add_subcommand("experiment", "quantitative reproduction suites");
    exp->require_subcommand(1);
    auto* exp_norris = exp->add_subcommand("norris", "depth-vs-n identities of the padded family");
    std::vector<int> norris_t = {2, 3, 4, 5, 6};
    exp_norris->add_option("--t-list", norris_t, "t values")->capture_default_str();
    auto* exp_cor = exp->add_subcommand("corollary", "stabilization of one (s,t) instance");
    int cor_s = 3, cor_t = 3;
    exp_cor->add_option("--s", cor_s, "path parameter")->capture_default_str();
    exp_cor->add_option("--t", cor_t, "block count")->capture_default_str();
    auto* exp_prop = exp->add_subcommand("properties", "seeded cross-validation suites");
    int prop_count = 200;
    exp_prop->add_option("--count", prop_count, "random pair count")->capture_default_str();
    auto* exp_max = exp->add_subcommand("maxstab", "exhaustive max stabilization index");
    int max_n = 7;
    exp_max->add_option("--n-max", max_n, "largest vertex count (<= 7)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_path_cmd->parsed()) {
            write_output(global, serialize_graph(gen_path(gen_opts.n)));
        } else if (gen_cycle_cmd->parsed()) {
            write_output(global, serialize_graph(gen_cycle(gen_opts.n)));
        } else if (gen_gst->parsed()) {
            emit_labeled(global, gen_opts, construct_gst({gen_opts.s, gen_opts.t}));
        } else if (gen_hst->parsed()) {
            emit_labeled(global, gen_opts, construct_hst({gen_opts.s, gen_opts.t}));
        } else if (gen_thm1->parsed()) {
            return run_gen_theorem1(global, gen_opts);
        } else if (refine->parsed()) {
            const RefinementHistory hist = run_refinement(load_graph(refine_file));
            std::string text = "stab " + std::to_string(hist.stab) + "\n";
            if (refine_history) {
                text += "round,classes\n";
                for (std::size_t i = 0; i < hist.rounds.size(); ++i) {
                    if (refine_rounds_cap >= 0 && static_cast<int>(i) > refine_rounds_cap) {
                        break;
                    }
                    text += std::to_string(i) + "," +
                            std::to_string(hist.rounds[i].class_count) + "\n";
                }
            }
            write_output(global, text);
        } else if (ucover->parsed()) {
            const TruncatedCover tc =
                truncated_ucover(load_graph(ucover_file), ucover_root, ucover_depth,
                                 ucover_budget);
            std::string text = std::to_string(tc.tree.node_count()) + "\n";
            if (ucover_canon) {
                text += ahu_canon(tc.tree) + "\n";
            }
            write_output(global, text);
        } else if (uiso->parsed()) {
            const auto d = distinguishing_depth(load_graph(uiso_g), uiso_roots[0],
                                                load_graph(uiso_h), uiso_roots[1]);
            write_output(global, d ? std::to_string(*d) + "\n" : "isomorphic\n");
        } else if (common->parsed()) {
            const CommonCoverResult r =
                have_common_cover(load_graph(common_g), load_graph(common_h));
            nlohmann::ordered_json j;
            j["sets_intersect"] = r.sets_intersect;
            j["sets_equal"] = r.sets_equal;
            j["stab_round_equal"] = r.stab_round_equal;
            write_output(global, std::string(r.decision ? "yes" : "no") + "\n" +
                                     j.dump() + "\n");
        } else if (depth->parsed()) {
            const Graph g = load_graph(depth_g);
            const Graph h = load_graph(depth_h);
            std::string text;
            if (depth_mode == "bisim") {
                if (depth_roots.size() != 2) {
                    throw std::runtime_error("mode bisim requires --roots X Y");
                }
                const auto d = bisim_depth(g, depth_roots[0], h, depth_roots[1]);
                text = d ? std::to_string(*d) : "equivalent";
            } else if (depth_mode == "fo2c") {
                try {
                    const auto d = fo2c_depth(g, h);
                    text = d ? std::to_string(*d) : "equivalent";
                } catch (const SizeGuardExceeded&) {
                    const DepthBounds b = fo2c_depth_bounds(g, h);
                    text = b.equivalent ? "equivalent"
                                        : "bounds [" + std::to_string(b.lower) + ", " +
                                              std::to_string(b.upper) + "]";
                }
            } else {
                const DepthBounds b = fo2c_depth_bounds(g, h);
                text = b.equivalent ? "equivalent"
                                    : "bounds [" + std::to_string(b.lower) + ", " +
                                          std::to_string(b.upper) + "]";
            }
            write_output(global, text + "\n");
        } else if (exp->parsed()) {
            ExperimentReport rep;
            if (exp_norris->parsed()) {
                rep = experiment_norris(norris_t);
            } else if (exp_cor->parsed()) {
                rep = experiment_corollary(cor_s, cor_t);
            } else if (exp_prop->parsed()) {
                rep = experiment_property_suite(global.seed, prop_count);
            } else {
                rep = experiment_max_stab(max_n);
            }
            write_output(global, report_text(global, rep));
            return rep.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
