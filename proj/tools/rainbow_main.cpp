// Command-line front end. Subcommands map one-to-one onto the library
// pipeline: generation, refinement, orientation, property checks, the path
// harness, the four tree-embedding routes, the brute-force oracles, and the
// named experiment suites. Exit codes: 0 on success, 1 when a search came up
// empty or a claimed guarantee failed, 2 on input errors.
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/coloring_ops.hpp"
#include "rainbow/error.hpp"
#include "rainbow/experiments.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/tree_search.hpp"

namespace {

using nlohmann::json;
using namespace rainbow;

constexpr int kExitSuccess = 0;
constexpr int kExitSearchFailure = 1;
constexpr int kExitInputError = 2;

struct GlobalOptions {
    std::uint64_t seed = 1;
    int guard_n = 0; // 0 keeps each operation's own default
    std::string json_out;

    int guard_or(int fallback) const { return guard_n > 0 ? guard_n : fallback; }
};

void emit_json(const GlobalOptions& global, const json& j) {
    if (!global.json_out.empty()) write_text_file(global.json_out, j.dump(2) + "\n");
}

void emit_text(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

UndirectedGraph load_undirected(const std::string& path) {
    return parse_undirected(read_text_file(path));
}

OrientedGraph load_oriented(const std::string& path) {
    return parse_oriented(read_text_file(path));
}

ParsedGraph load_any(const std::string& path) { return parse_graph(read_text_file(path)); }

RootedOrientedTree load_tree(const std::string& path) { return parse_tree(read_text_file(path)); }

Coloring load_coloring(const std::string& path, int vertex_count) {
    return parse_coloring(read_text_file(path), vertex_count);
}

std::string flag_text(const std::optional<bool>& b) {
    if (!b.has_value()) return "-";
    return *b ? "yes" : "no";
}

json verdict_json(const Verdict& v) {
    json j;
    j["induced"] = v.induced;
    if (v.direction_exact) j["direction_exact"] = *v.direction_exact;
    if (v.rainbow) j["rainbow"] = *v.rainbow;
    if (v.decreasing) j["decreasing"] = *v.decreasing;
    return j;
}

void print_embedding(const Embedding& e) {
    std::cout << "embedded " << e.image.size() << " vertices:";
    for (std::size_t v = 0; v < e.image.size(); ++v)
        std::cout << ' ' << v << "->" << e.image[v];
    std::cout << "\nverdict: induced=" << (e.verdict.induced ? "yes" : "no")
              << " direction_exact=" << flag_text(e.verdict.direction_exact)
              << " rainbow=" << flag_text(e.verdict.rainbow)
              << " decreasing=" << flag_text(e.verdict.decreasing) << "\n";
}

int report_search_outcome(const GlobalOptions& global, const std::string& variant,
                          const SearchOutcome& outcome) {
    json j;
    j["variant"] = variant;
    j["success"] = outcome.success();
    if (outcome.success()) {
        j["image"] = outcome.embedding->image;
        j["verdict"] = verdict_json(outcome.embedding->verdict);
        print_embedding(*outcome.embedding);
    } else {
        j["placed"] = outcome.trace.placed;
        std::cout << "no embedding: placed " << outcome.trace.placed.size() << " of "
                  << outcome.trace.pattern.vertex_count() << " vertices\n";
    }
    emit_json(global, j);
    return outcome.success() ? kExitSuccess : kExitSearchFailure;
}

// gen ------------------------------------------------------------------

struct GenCommon {
    std::string out;
};

int run_gen_graph(const GlobalOptions& global, const GenCommon& common,
                  const UndirectedGraph& g) {
    emit_text(common.out, serialize_graph(g));
    emit_json(global, {{"kind", "graph"},
                       {"n", g.vertex_count()},
                       {"edges", g.edges().size()},
                       {"out", common.out}});
    return kExitSuccess;
}

int run_gen_digraph(const GlobalOptions& global, const GenCommon& common,
                    const OrientedGraph& d) {
    emit_text(common.out, serialize_graph(d));
    emit_json(global, {{"kind", "digraph"},
                       {"n", d.vertex_count()},
                       {"arcs", d.arcs().size()},
                       {"out", common.out}});
    return kExitSuccess;
}

// experiment -----------------------------------------------------------

struct ExperimentOptions {
    std::string suite;
    int count = 0; // 0 picks the suite's acceptance-scale default
    int max_n = 0;
    int r = 2;
    int s = 3;
    int graphs = 200;
    int colorings = 10;
    int corpus = 5;
    int planted = 30;
    int workers = 0;
    std::string csv_out;
};

int run_experiment(const GlobalOptions& global, const ExperimentOptions& opt) {
    SuiteOptions suite_options{global.seed, opt.workers};
    ExperimentReport report;
    if (opt.suite == "refinement") {
        report = refinement_suite(opt.count ? opt.count : 200, opt.max_n ? opt.max_n : 60,
                                  suite_options);
    } else if (opt.suite == "lemma-main") {
        report = lemma_main_suite(opt.r, opt.s, opt.count ? opt.count : 50, suite_options);
    } else if (opt.suite == "oracle-agreement") {
        report = oracle_agreement_suite(opt.count ? opt.count : 300, opt.max_n ? opt.max_n : 12,
                                        suite_options);
    } else if (opt.suite == "rainbow-theorem") {
        report = rainbow_theorem_suite();
    } else if (opt.suite == "aravind") {
        report = aravind_suite(opt.graphs, opt.colorings, suite_options);
    } else if (opt.suite == "dag-embedding") {
        report = dag_embedding_suite(opt.corpus, suite_options);
    } else if (opt.suite == "parity-bikernel") {
        report = parity_bikernel_suite(opt.count ? opt.count : 200,
                                       opt.max_n ? opt.max_n : 300, suite_options);
    } else if (opt.suite == "br-embedding") {
        report = br_embedding_suite(opt.planted, suite_options);
    } else if (opt.suite == "extraction") {
        report = extraction_suite();
    } else if (opt.suite == "generator-fidelity") {
        report = generator_fidelity_suite(suite_options);
    } else {
        throw Error("unknown suite '" + opt.suite +
                    "'; expected one of refinement, lemma-main, oracle-agreement, "
                    "rainbow-theorem, aravind, dag-embedding, parity-bikernel, br-embedding, "
                    "extraction, generator-fidelity");
    }

    auto summary = report.summary();
    bool ok = summary.clean() && report.all_succeeded();
    std::cout << report.command << "\ninstances=" << summary.instances
              << " successes=" << summary.successes << " verified=" << summary.verified
              << " violations=" << summary.guarantee_violations << " -> "
              << (ok ? "PASS" : "FAIL") << "\n";
    if (!global.json_out.empty()) write_text_file(global.json_out, report.to_json());
    if (!opt.csv_out.empty())
        write_text_file(opt.csv_out, ExperimentReport::csv_header() + report.csv_row());
    return ok ? kExitSuccess : kExitSearchFailure;
}

// verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string input;
    std::string coloring;
    bool girth = false;
    bool acyclic = false;
    bool proper = false;
    bool outtree = false;
    bool parity = false;
    int k2r = 0;
    int br = 0;
};

int run_verify(const GlobalOptions& global, const VerifyOptions& opt) {
    ParsedGraph parsed = load_any(opt.input);
    const auto* und = std::get_if<UndirectedGraph>(&parsed);
    const auto* ori = std::get_if<OrientedGraph>(&parsed);
    int n = und ? und->vertex_count() : ori->vertex_count();
    UndirectedGraph underlying = und ? *und : ori->underlying();

    std::optional<Coloring> coloring;
    if (!opt.coloring.empty()) coloring = load_coloring(opt.coloring, n);
    auto need_coloring = [&]() -> const Coloring& {
        if (!coloring) throw Error("this check needs --coloring");
        return *coloring;
    };
    auto need_oriented = [&]() -> const OrientedGraph& {
        if (!ori) throw Error("this check needs a digraph input");
        return *ori;
    };

    json results;
    bool all_ok = true;
    if (opt.girth) {
        auto g = girth(underlying);
        std::cout << (g ? std::to_string(*g) : std::string("none")) << "\n";
        results["girth"] = g ? json(*g) : json(nullptr);
    }
    if (opt.acyclic) {
        bool ok = is_acyclic(need_oriented());
        std::cout << "acyclic: " << (ok ? "true" : "false") << "\n";
        results["acyclic"] = ok;
        all_ok = all_ok && ok;
    }
    if (opt.proper) {
        bool ok = is_proper(underlying, need_coloring());
        std::cout << "proper: " << (ok ? "true" : "false") << "\n";
        results["proper"] = ok;
        all_ok = all_ok && ok;
    }
    if (opt.outtree) {
        auto check = check_outtree_coloring(need_oriented(), need_coloring());
        std::cout << "outtree-coloring: " << (check.ok ? "true" : "false");
        if (!check.ok)
            std::cout << " (vertex " << check.vertex << " misses color " << check.missing_color
                      << ")";
        std::cout << "\n";
        results["outtree_coloring"] = check.ok;
        all_ok = all_ok && check.ok;
    }
    if (opt.parity) {
        auto check = check_parity_coloring(need_oriented(), need_coloring());
        std::cout << "parity-coloring: " << (check.ok ? "true" : "false");
        if (!check.ok)
            std::cout << " (vertex " << check.vertex << " misses color " << check.missing_color
                      << ")";
        std::cout << "\n";
        results["parity_coloring"] = check.ok;
        all_ok = all_ok && check.ok;
    }
    if (opt.k2r > 0) {
        auto witness = find_k2r(underlying, opt.k2r);
        if (witness) {
            std::cout << "k2r witness: " << witness->a << " " << witness->b << " via";
            for (int v : witness->common) std::cout << ' ' << v;
            std::cout << "\n";
        } else {
            std::cout << "k2r witness: none\n";
        }
        results["k2r_free"] = !witness.has_value();
        all_ok = all_ok && !witness.has_value();
    }
    if (opt.br > 0) {
        auto witness = find_br(need_oriented(), opt.br);
        if (witness) {
            std::cout << "br witness: tail " << witness->tail << " other " << witness->other
                      << " via";
            for (int v : witness->middles) std::cout << ' ' << v;
            std::cout << "\n";
        } else {
            std::cout << "br witness: none\n";
        }
        results["br_free"] = !witness.has_value();
        all_ok = all_ok && !witness.has_value();
    }
    emit_json(global, results);
    return all_ok ? kExitSuccess : kExitSearchFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced rainbow paths and oriented tree embeddings in colored graphs"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "base RNG seed for seeded operations")
        ->capture_default_str();
    app.add_option("--guard-n", global.guard_n,
                   "override for size guards on exact procedures (0 keeps defaults)")
        ->envname("RAINBOW_GUARD_N")
        ->capture_default_str();
    app.add_option("--json-out", global.json_out, "write a machine-readable result here");

    std::function<int()> action;

    // gen ----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate graphs, digraphs, trees, and colorings");
    gen->require_subcommand(1);
    {
        auto common = std::make_shared<GenCommon>();

        auto* named = gen->add_subcommand("named", "catalog graph by name");
        auto spec = std::make_shared<std::string>();
        named->add_option("--spec", *spec, "e.g. petersen, grotzsch, cycle:5, kneser:5,2")
            ->required();
        named->add_option("--out", common->out, "output file (stdout when absent)");
        named->callback([&, spec, common] {
            action = [&, spec, common] {
                return run_gen_graph(global, *common, named_graph(*spec));
            };
        });

        auto* rg = gen->add_subcommand("random-graph", "G(n,p) sample, optionally filtered");
        auto rg_opt = std::make_shared<std::tuple<int, double, bool, int, int>>(10, 0.3, false, 0,
                                                                                500);
        rg->add_option("--n", std::get<0>(*rg_opt), "vertex count")->required();
        rg->add_option("--p", std::get<1>(*rg_opt), "edge probability")->required();
        rg->add_flag("--triangle-free", std::get<2>(*rg_opt), "resample until triangle-free");
        rg->add_option("--girth", std::get<3>(*rg_opt), "resample until girth at least this");
        rg->add_option("--retries", std::get<4>(*rg_opt), "filter retry budget")
            ->capture_default_str();
        rg->add_option("--out", common->out, "output file (stdout when absent)");
        rg->callback([&, rg_opt, common] {
            action = [&, rg_opt, common] {
                auto [n, p, triangle_free, girth_bound, retries] = *rg_opt;
                GraphFilter filter = GraphFilter::None;
                if (triangle_free) filter = GraphFilter::TriangleFree;
                if (girth_bound > 0) filter = GraphFilter::GirthAtLeast;
                return run_gen_graph(
                    global, *common,
                    random_graph(n, p, global.seed, filter, girth_bound, retries));
            };
        });

        auto* rd = gen->add_subcommand("random-dag", "random acyclic orientation sample");
        auto rd_opt = std::make_shared<std::pair<int, double>>(20, 0.3);
        rd->add_option("--n", rd_opt->first, "vertex count")->required();
        rd->add_option("--p", rd_opt->second, "arc probability")->required();
        rd->add_option("--out", common->out, "output file (stdout when absent)");
        rd->callback([&, rd_opt, common] {
            action = [&, rd_opt, common] {
                return run_gen_digraph(global, *common,
                                       random_dag(rd_opt->first, rd_opt->second, global.seed));
            };
        });

        auto* myc = gen->add_subcommand("mycielski", "iterated Mycielskian of a catalog graph");
        auto myc_opt = std::make_shared<std::pair<std::string, int>>("path:2", 1);
        myc->add_option("--base", myc_opt->first, "catalog name of the base graph")->required();
        myc->add_option("--levels", myc_opt->second, "iterations")->required();
        myc->add_option("--out", common->out, "output file (stdout when absent)");
        myc->callback([&, myc_opt, common] {
            action = [&, myc_opt, common] {
                return run_gen_graph(global, *common,
                                     mycielski(named_graph(myc_opt->first), myc_opt->second));
            };
        });

        auto* pp = gen->add_subcommand("projective-plane", "point-line incidence graph");
        auto q = std::make_shared<int>(3);
        pp->add_option("--q", *q, "prime order")->required();
        pp->add_option("--out", common->out, "output file (stdout when absent)");
        pp->callback([&, q, common] {
            action = [&, q, common] {
                return run_gen_graph(global, *common, projective_plane_incidence(*q));
            };
        });

        auto* ary = gen->add_subcommand("ary-tree", "complete ary out-tree");
        auto ary_opt = std::make_shared<std::pair<int, int>>(2, 2);
        ary->add_option("--arity", ary_opt->first, "children per internal vertex")->required();
        ary->add_option("--levels", ary_opt->second, "depth levels")->required();
        ary->add_option("--out", common->out, "output file (stdout when absent)");
        ary->callback([&, ary_opt, common] {
            action = [&, ary_opt, common] {
                auto tree = complete_ary_tree(ary_opt->first, ary_opt->second);
                emit_text(common->out, serialize_tree(tree));
                emit_json(global, {{"kind", "tree"}, {"n", tree.vertex_count()}});
                return kExitSuccess;
            };
        });

        auto* synth = gen->add_subcommand("synth", "constraint-respecting colored digraph");
        struct SynthOpt {
            int k = 6;
            int r = 0;
            int girth = 0;
            std::vector<int> sizes;
            double prob = 0.15;
            int budget = 500;
            std::string coloring_out;
        };
        auto sy = std::make_shared<SynthOpt>();
        synth->add_option("--k", sy->k, "color count")->required();
        synth->add_option("--r", sy->r, "forbid r-fans (B_r)");
        synth->add_option("--girth", sy->girth, "require girth at least this");
        synth->add_option("--sizes", sy->sizes, "class sizes, largest first (default geometric)");
        synth->add_option("--prob", sy->prob, "extra arc probability")->capture_default_str();
        synth->add_option("--budget", sy->budget, "restart budget")->capture_default_str();
        synth->add_option("--out", common->out, "digraph output file")->required();
        synth->add_option("--coloring-out", sy->coloring_out,
                          "coloring output file (default: <out>.coloring)");
        synth->callback([&, sy, common] {
            action = [&, sy, common] {
                if ((sy->r > 0) == (sy->girth > 0))
                    throw Error("pass exactly one of --r and --girth");
                SynthConstraint constraint = sy->r > 0 ? SynthConstraint::br_free(sy->r)
                                                       : SynthConstraint::girth_at_least(sy->girth);
                auto sizes = sy->sizes.empty() ? default_class_sizes(sy->k) : sy->sizes;
                auto inst = synth_outtree_colored(sy->k, sizes, constraint, sy->prob, global.seed,
                                                  sy->budget);
                std::string coloring_path =
                    sy->coloring_out.empty() ? common->out + ".coloring" : sy->coloring_out;
                write_text_file(common->out, serialize_graph(inst.digraph));
                write_text_file(coloring_path, serialize_coloring(inst.alpha));
                std::cout << "n=" << inst.digraph.vertex_count()
                          << " arcs=" << inst.digraph.arcs().size() << " colors=" << sy->k << "\n";
                emit_json(global, {{"kind", "synth"},
                                   {"n", inst.digraph.vertex_count()},
                                   {"arcs", inst.digraph.arcs().size()},
                                   {"out", common->out},
                                   {"coloring_out", coloring_path}});
                return kExitSuccess;
            };
        });

        auto* col = gen->add_subcommand("coloring", "proper coloring of an input graph");
        struct ColOpt {
            std::string input;
            std::string mode = "exact";
        };
        auto co = std::make_shared<ColOpt>();
        col->add_option("--input", co->input, "graph file")->required();
        col->add_option("--mode", co->mode, "exact | greedy")->capture_default_str();
        col->add_option("--out", common->out, "output file (stdout when absent)");
        col->callback([&, co, common] {
            action = [&, co, common] {
                UndirectedGraph g = load_undirected(co->input);
                Coloring coloring;
                if (co->mode == "exact") {
                    coloring = chromatic_number_exact(g, global.guard_or(guards::kExactChromatic))
                                   .coloring;
                } else if (co->mode == "greedy") {
                    std::mt19937_64 rng(global.seed);
                    std::vector<int> order(g.vertex_count());
                    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
                    for (int v = g.vertex_count() - 1; v > 0; --v)
                        std::swap(order[v], order[rng() % (v + 1)]);
                    coloring = greedy_coloring(g, order);
                } else {
                    throw Error("unknown coloring mode '" + co->mode + "'");
                }
                emit_text(common->out, serialize_coloring(coloring));
                emit_json(global, {{"colors", coloring.color_count()}});
                return kExitSuccess;
            };
        });
    }

    // refine / orient ------------------------------------------------------
    {
        auto* refine = app.add_subcommand("refine", "greedy refinement of a proper coloring");
        struct RefineOpt {
            std::string input, coloring, coloring_out;
        };
        auto ro = std::make_shared<RefineOpt>();
        refine->add_option("--input", ro->input, "graph file")->required();
        refine->add_option("--coloring", ro->coloring, "coloring file")->required();
        refine->add_option("--coloring-out", ro->coloring_out, "refined coloring output");
        refine->callback([&, ro] {
            action = [&, ro] {
                UndirectedGraph g = load_undirected(ro->input);
                Coloring beta = load_coloring(ro->coloring, g.vertex_count());
                auto result = greedy_refinement(g, beta);
                std::cout << "colors: " << result.color_count_before << " -> "
                          << result.color_count_after << "\n";
                if (!ro->coloring_out.empty())
                    write_text_file(ro->coloring_out, serialize_coloring(result.alpha));
                emit_json(global, {{"colors_before", result.color_count_before},
                                   {"colors_after", result.color_count_after}});
                return kExitSuccess;
            };
        });

        auto* orient = app.add_subcommand("orient", "orient edges along decreasing color rank");
        struct OrientOpt {
            std::string input, coloring, out;
        };
        auto oo = std::make_shared<OrientOpt>();
        orient->add_option("--input", oo->input, "graph file")->required();
        orient->add_option("--coloring", oo->coloring, "coloring file")->required();
        orient->add_option("--out", oo->out, "digraph output file (stdout when absent)");
        orient->callback([&, oo] {
            action = [&, oo] {
                UndirectedGraph g = load_undirected(oo->input);
                Coloring c = load_coloring(oo->coloring, g.vertex_count());
                OrientedGraph d = natural_orientation(g, c);
                emit_text(oo->out, serialize_graph(d));
                emit_json(global, {{"n", d.vertex_count()}, {"arcs", d.arcs().size()}});
                return kExitSuccess;
            };
        });
    }

    // verify ----------------------------------------------------------------
    {
        auto* verify = app.add_subcommand("verify", "property checkers on graph files");
        auto vo = std::make_shared<VerifyOptions>();
        verify->add_option("--input", vo->input, "graph or digraph file")->required();
        verify->add_option("--coloring", vo->coloring, "coloring file for coloring checks");
        verify->add_flag("--girth", vo->girth, "print the girth");
        verify->add_flag("--acyclic", vo->acyclic, "digraph acyclicity");
        verify->add_flag("--proper", vo->proper, "coloring properness");
        verify->add_flag("--outtree-coloring", vo->outtree, "out-tree coloring check");
        verify->add_flag("--parity-coloring", vo->parity, "parity coloring check");
        verify->add_option("--k2r", vo->k2r, "search for a complete bipartite 2,r witness");
        verify->add_option("--br", vo->br, "search for an r-fan witness");
        verify->callback([&, vo] {
            action = [&, vo] { return run_verify(global, *vo); };
        });
    }

    // find-rainbow-path ------------------------------------------------------
    {
        auto* find = app.add_subcommand("find-rainbow-path",
                                        "induced rainbow paths via the ordered search");
        struct PathOpt {
            std::string input, coloring, orderings = "all";
            int s = 2;
        };
        auto po = std::make_shared<PathOpt>();
        find->add_option("--input", po->input, "graph file")->required();
        find->add_option("--coloring", po->coloring, "proper coloring file")->required();
        find->add_option("--s", po->s, "path vertex count")->required();
        find->add_option("--orderings", po->orderings, "'all' or a sample count")
            ->capture_default_str();
        find->callback([&, po] {
            action = [&, po] {
                UndirectedGraph g = load_undirected(po->input);
                Coloring beta = load_coloring(po->coloring, g.vertex_count());
                OrderingPlan plan = OrderingPlan::all();
                if (po->orderings != "all") {
                    int count = 0;
                    try {
                        count = std::stoi(po->orderings);
                    } catch (const std::exception&) {
                        throw Error("--orderings takes 'all' or a positive count");
                    }
                    plan = OrderingPlan::sample(count, global.seed);
                }
                auto result = rainbow_paths_harness(g, beta, po->s, plan,
                                                    global.guard_or(guards::kAllOrderingsColors));
                std::cout << "orderings: " << result.orderings_tried
                          << " successes: " << result.successes
                          << " distinct paths: " << result.paths.size() << "\n";
                json paths = json::array();
                for (const auto& path : result.paths) {
                    std::cout << "path:";
                    for (int v : path.vertices) std::cout << ' ' << v;
                    std::cout << "\n";
                    paths.push_back(path.vertices);
                }
                emit_json(global, {{"orderings_tried", result.orderings_tried},
                                   {"successes", result.successes},
                                   {"paths", paths}});
                return result.paths.empty() ? kExitSearchFailure : kExitSuccess;
            };
        });
    }

    // find-tree ---------------------------------------------------------------
    {
        auto* find = app.add_subcommand("find-tree", "embed an oriented tree in a digraph");
        find->require_subcommand(1);
        struct TreeOpt {
            std::string input, tree, coloring;
            int r = 2;
            int girth = 0;
        };
        auto to = std::make_shared<TreeOpt>();

        auto add_common = [&](CLI::App* sub, bool coloring_allowed) {
            sub->add_option("--input", to->input, "digraph file")->required();
            sub->add_option("--tree", to->tree, "tree file")->required();
            if (coloring_allowed)
                sub->add_option("--coloring", to->coloring, "out-tree coloring file (optional)");
        };

        auto* dag = find->add_subcommand("dag", "out-tree or in-tree in a DAG");
        add_common(dag, true);
        dag->callback([&, to] {
            action = [&, to] {
                OrientedGraph d = load_oriented(to->input);
                RootedOrientedTree tree = load_tree(to->tree);
                std::optional<Coloring> alpha;
                if (!to->coloring.empty()) alpha = load_coloring(to->coloring, d.vertex_count());
                auto outcome = dag_tree_embedding(d, tree, alpha ? &*alpha : nullptr);
                return report_search_outcome(global, "dag", outcome);
            };
        });

        auto* parity = find->add_subcommand("parity", "any oriented tree via parity layers");
        add_common(parity, false);
        parity->callback([&, to] {
            action = [&, to] {
                OrientedGraph d = load_oriented(to->input);
                RootedOrientedTree tree = load_tree(to->tree);
                auto outcome = bikernel_tree_embedding(
                    d, tree, global.guard_or(guards::kKernelBacktrack));
                return report_search_outcome(global, "parity", outcome);
            };
        });

        auto* br = find->add_subcommand("br", "peel-and-attach in a fan-free digraph");
        add_common(br, false);
        br->add_option("--r", to->r, "fan parameter (host must be B_r-free)")
            ->capture_default_str();
        br->callback([&, to] {
            action = [&, to] {
                OrientedGraph d = load_oriented(to->input);
                RootedOrientedTree tree = load_tree(to->tree);
                auto outcome = br_tree_embedding(d, tree, to->r);
                json j;
                j["variant"] = "br";
                j["success"] = outcome.success();
                j["levels"] = outcome.levels.size();
                if (outcome.success()) {
                    j["image"] = outcome.embedding->image;
                    j["verdict"] = verdict_json(outcome.embedding->verdict);
                    print_embedding(*outcome.embedding);
                } else {
                    j["stuck_level"] = outcome.stuck_level;
                    j["partial_image"] = outcome.partial_image;
                    std::cout << "no embedding: stuck at peel level " << outcome.stuck_level
                              << " of " << outcome.levels.size() << "\n";
                }
                emit_json(global, j);
                return outcome.success() ? kExitSuccess : kExitSearchFailure;
            };
        });

        auto* girth_sub = find->add_subcommand(
            "girth", "core search plus a dead-end diagnostic for girth-bounded hosts");
        add_common(girth_sub, true);
        girth_sub->add_option("--g", to->girth, "host girth parameter (at least 5)")->required();
        girth_sub->callback([&, to] {
            action = [&, to] {
                OrientedGraph d = load_oriented(to->input);
                RootedOrientedTree tree = load_tree(to->tree);
                std::optional<Coloring> alpha;
                if (!to->coloring.empty()) alpha = load_coloring(to->coloring, d.vertex_count());
                auto outcome = dag_tree_embedding(d, tree, alpha ? &*alpha : nullptr);
                if (outcome.success()) return report_search_outcome(global, "girth", outcome);

                StuckStateReport report;
                try {
                    report = stuck_state_diagnostic(outcome.trace, to->girth);
                } catch (const Error& e) {
                    std::cout << "no embedding: placed " << outcome.trace.placed.size() << " of "
                              << tree.vertex_count() << "\n"
                              << "diagnostic unavailable: " << e.what() << "\n";
                    emit_json(global, {{"variant", "girth"},
                                       {"success", false},
                                       {"placed", outcome.trace.placed},
                                       {"diagnostic", nullptr}});
                    return kExitSearchFailure;
                }
                std::cout << "no embedding: placed " << report.placed_count << " of "
                          << tree.vertex_count() << "\n";
                std::cout << "diagnostic: colors=" << report.color_count << " blocked=[";
                for (std::size_t i = 0; i < report.blocked.size(); ++i)
                    std::cout << (i ? " " : "") << report.blocked[i];
                std::cout << "] accounting=" << (report.color_accounting_ok ? "ok" : "BAD")
                          << " second_step=" << (report.second_step_clean ? "clean" : "BAD")
                          << " aux_girth="
                          << (report.auxiliary_girth ? std::to_string(*report.auxiliary_girth)
                                                     : std::string("acyclic"))
                          << (report.girth_ok ? " (ok)" : " (BAD)")
                          << " edges=" << report.auxiliary_edges << "<" << report.edge_bound
                          << (report.edge_bound_ok ? " (ok)" : " (BAD)")
                          << " reconstruction=" << (report.reconstruction_ok ? "ok" : "BAD")
                          << " all_hold=" << (report.all_hold() ? "yes" : "no") << "\n";
                json j;
                j["variant"] = "girth";
                j["success"] = false;
                j["placed"] = outcome.trace.placed;
                j["diagnostic"] = {{"placed_count", report.placed_count},
                                   {"color_count", report.color_count},
                                   {"blocked", report.blocked},
                                   {"color_accounting_ok", report.color_accounting_ok},
                                   {"second_step_clean", report.second_step_clean},
                                   {"auxiliary_girth", report.auxiliary_girth
                                                           ? json(*report.auxiliary_girth)
                                                           : json(nullptr)},
                                   {"girth_ok", report.girth_ok},
                                   {"auxiliary_edges", report.auxiliary_edges},
                                   {"edge_bound", report.edge_bound},
                                   {"edge_bound_ok", report.edge_bound_ok},
                                   {"reconstruction_ok", report.reconstruction_ok},
                                   {"all_hold", report.all_hold()}};
                emit_json(global, j);
                return kExitSearchFailure;
            };
        });
    }

    // oracle --------------------------------------------------------------
    {
        auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
        oracle->require_subcommand(1);
        struct OracleOpt {
            std::string input, coloring, tree;
            int s = 2;
            int graphs = 50;
            int colorings = 10;
        };
        auto oo = std::make_shared<OracleOpt>();

        auto* paths = oracle->add_subcommand("paths", "enumerate induced rainbow paths");
        paths->add_option("--input", oo->input, "graph file")->required();
        paths->add_option("--coloring", oo->coloring, "proper coloring file")->required();
        paths->add_option("--s", oo->s, "path vertex count")->required();
        paths->callback([&, oo] {
            action = [&, oo] {
                UndirectedGraph g = load_undirected(oo->input);
                Coloring c = load_coloring(oo->coloring, g.vertex_count());
                auto result = enumerate_induced_rainbow_paths(
                    g, c, oo->s, global.guard_or(guards::kEnumPathsVertices),
                    std::max(oo->s, guards::kEnumPathsLength));
                std::cout << result.size() << " paths\n";
                json arr = json::array();
                for (const auto& path : result) {
                    std::cout << "path:";
                    for (int v : path.vertices) std::cout << ' ' << v;
                    std::cout << "\n";
                    arr.push_back(path.vertices);
                }
                emit_json(global, {{"count", result.size()}, {"paths", arr}});
                return kExitSuccess;
            };
        });

        auto* mu_cmd = oracle->add_subcommand("mu", "largest induced rainbow path size");
        mu_cmd->add_option("--input", oo->input, "graph file")->required();
        mu_cmd->add_option("--coloring", oo->coloring, "proper coloring file")->required();
        mu_cmd->callback([&, oo] {
            action = [&, oo] {
                UndirectedGraph g = load_undirected(oo->input);
                Coloring c = load_coloring(oo->coloring, g.vertex_count());
                int value = mu(g, c, global.guard_or(guards::kEnumPathsVertices));
                std::cout << value << "\n";
                emit_json(global, {{"mu", value}});
                return kExitSuccess;
            };
        });

        auto* contains = oracle->add_subcommand("contains", "induced-copy decision");
        contains->add_option("--input", oo->input, "graph or digraph file")->required();
        contains->add_option("--tree", oo->tree, "tree file")->required();
        contains->callback([&, oo] {
            action = [&, oo] {
                ParsedGraph host = load_any(oo->input);
                RootedOrientedTree tree = load_tree(oo->tree);
                int guard = global.guard_or(guards::kInducedCopyVertices);
                std::optional<std::vector<int>> witness;
                if (const auto* g = std::get_if<UndirectedGraph>(&host))
                    witness = contains_induced_copy(*g, tree, guard);
                else
                    witness = contains_induced_copy(std::get<OrientedGraph>(host), tree, guard);
                if (witness) {
                    std::cout << "contains:";
                    for (int v : *witness) std::cout << ' ' << v;
                    std::cout << "\n";
                } else {
                    std::cout << "no induced copy\n";
                }
                emit_json(global, {{"contains", witness.has_value()},
                                   {"witness", witness ? json(*witness) : json(nullptr)}});
                return witness ? kExitSuccess : kExitSearchFailure;
            };
        });

        auto* aravind = oracle->add_subcommand("aravind",
                                               "scan exact colorings for rainbow chi-paths");
        aravind->add_option("--input", oo->input, "triangle-free graph file (optional)");
        aravind->add_option("--graphs", oo->graphs, "random corpus size when no input")
            ->capture_default_str();
        aravind->add_option("--colorings", oo->colorings, "colorings sampled per graph")
            ->capture_default_str();
        aravind->callback([&, oo] {
            action = [&, oo] {
                std::vector<UndirectedGraph> corpus;
                if (!oo->input.empty()) {
                    corpus.push_back(load_undirected(oo->input));
                } else {
                    for (int i = 0; i < oo->graphs; ++i) {
                        std::mt19937_64 rng(global.seed + 0x9E3779B97F4A7C15ULL * (i + 1));
                        int n = 5 + static_cast<int>(rng() % 8);
                        double cap =
                            std::cbrt(12.0 / (static_cast<double>(n) * (n - 1) * (n - 2)));
                        double p = cap * (0.5 + static_cast<double>(rng() % 60) / 100.0);
                        corpus.push_back(random_graph(n, p, rng(), GraphFilter::TriangleFree, 0,
                                                      500));
                    }
                }
                auto report = aravind_scan(corpus, oo->colorings, global.seed,
                                           global.guard_or(guards::kExactChromatic),
                                           global.guard_or(guards::kEnumPathsVertices), 13);
                std::cout << "pairs checked: " << report.instances_checked
                          << " skipped: " << report.skipped.size()
                          << " counterexamples: " << report.counterexamples.size() << "\n";
                json counters = json::array();
                for (const auto& ce : report.counterexamples) {
                    std::cout << "counterexample on corpus graph " << ce.graph_index << ":\n"
                              << serialize_graph(corpus[ce.graph_index])
                              << serialize_coloring(ce.coloring);
                    counters.push_back({{"graph", serialize_graph(corpus[ce.graph_index])},
                                        {"coloring", serialize_coloring(ce.coloring)}});
                }
                emit_json(global, {{"pairs", report.instances_checked},
                                   {"skipped", report.skipped.size()},
                                   {"counterexamples", counters}});
                return report.counterexamples.empty() ? kExitSuccess : kExitSearchFailure;
            };
        });
    }

    // experiment ------------------------------------------------------------
    {
        auto* experiment = app.add_subcommand("experiment", "named acceptance suites");
        auto eo = std::make_shared<ExperimentOptions>();
        experiment->add_option("suite", eo->suite, "suite name (see README)")->required();
        experiment->add_option("--seeds,--count", eo->count, "instance count");
        experiment->add_option("--max-n", eo->max_n, "largest instance size");
        experiment->add_option("--r", eo->r, "fan parameter")->capture_default_str();
        experiment->add_option("--s", eo->s, "tree vertex count")->capture_default_str();
        experiment->add_option("--graphs", eo->graphs, "aravind corpus size")
            ->capture_default_str();
        experiment->add_option("--colorings", eo->colorings, "aravind colorings per graph")
            ->capture_default_str();
        experiment->add_option("--corpus", eo->corpus, "dag-embedding corpus size")
            ->capture_default_str();
        experiment->add_option("--planted", eo->planted, "br-embedding planted instances")
            ->capture_default_str();
        experiment->add_option("--workers", eo->workers, "worker threads (0 picks automatically)");
        experiment->add_option("--csv-out", eo->csv_out, "write the aggregate CSV row here");
        experiment->callback([&, eo] {
            action = [&, eo] { return run_experiment(global, *eo); };
        });
    }

    // Let --seed/--guard-n/--json-out appear after a subcommand name too.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        for (auto* sub : node->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (!action) {
            std::cerr << app.help() << "\n";
            return kExitInputError;
        }
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
