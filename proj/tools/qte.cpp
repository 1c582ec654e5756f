#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qte/edits.hpp"
#include "qte/exact.hpp"
#include "qte/generator.hpp"
#include "qte/graph.hpp"
#include "qte/init_edit.hpp"
#include "qte/lowerbound.hpp"
#include "qte/ng_baseline.hpp"
#include "qte/qtm.hpp"
#include "qte/recognition.hpp"
#include "qte/triangles.hpp"

namespace {

using namespace qte;
using json = nlohmann::json;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct Summary {
    bool as_json = false;
    json data = json::object();

    void set(const std::string& key, const json& value) {
        data[key] = value;
        if (!as_json) {
            std::cout << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump())
                      << '\n';
        }
    }

    void finish() const {
        if (as_json) std::cout << data.dump(2) << '\n';
    }
};

SkeletonForest build_initial(const Graph& g, const std::string& init) {
    if (init == "trivial") return make_all_roots(g.node_count());
    return initial_skeleton(g, count_triangles(g));
}

struct RunStats {
    std::vector<double> edits;
    std::vector<double> iterations;
    std::vector<double> times_ms;
};

void report_stats(Summary& out, const RunStats& s) {
    auto mean = [](const std::vector<double>& v) {
        double sum = 0;
        for (double x : v) sum += x;
        return v.empty() ? 0.0 : sum / static_cast<double>(v.size());
    };
    auto stddev = [&](const std::vector<double>& v) {
        if (v.size() < 2) return 0.0;
        const double m = mean(v);
        double acc = 0;
        for (double x : v) acc += (x - m) * (x - m);
        return std::sqrt(acc / static_cast<double>(v.size() - 1));
    };
    out.set("edits_min", *std::min_element(s.edits.begin(), s.edits.end()));
    out.set("edits_mean", mean(s.edits));
    out.set("edits_std", stddev(s.edits));
    if (!s.iterations.empty()) {
        out.set("iterations_mean", mean(s.iterations));
        out.set("iterations_max", *std::max_element(s.iterations.begin(), s.iterations.end()));
    }
    out.set("time_mean_ms", mean(s.times_ms));
    out.set("time_std_ms", stddev(s.times_ms));
}

} // namespace

namespace {

int run_cli(int argc, char** argv) {
    CLI::App app{"quasi-threshold editing toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable summary");

    std::string graph_path, skeleton_out, edits_out, edits_in, out_prefix;
    std::string init = "heuristic";
    std::uint64_t seed = 0;
    count rounds = 4;
    bool until_stable = false;
    bool show_pairs = false;
    bool trace = false;
    count kmax = 10;
    count gen_n = 0, gen_k = 0;
    count runs = 10;
    std::string algo = "qtm";
    count revert_depth = 10;
    bool use_bst = false;
    bool freeze_edited = false;

    auto* rec = app.add_subcommand("recognize", "certifying quasi-threshold recognition");
    rec->add_option("graph", graph_path)->required();
    rec->add_option("--skeleton", skeleton_out, "write the skeleton on acceptance");

    bool resort = false;
    auto* bound = app.add_subcommand("bound", "edit-distance lower bound");
    bound->add_option("graph", graph_path)->required();
    bound->add_option("--seed", seed);
    bound->add_flag("--pairs", show_pairs, "list removed node pairs");
    bound->add_flag("--resort", resort, "iterate by current instead of initial degree");

    auto* init_cmd = app.add_subcommand("init", "initial skeleton heuristic");
    init_cmd->add_option("graph", graph_path)->required();
    init_cmd->add_option("--init", init)->check(CLI::IsMember({"heuristic", "trivial"}));
    init_cmd->add_option("--skeleton", skeleton_out);

    auto* qtm_cmd = app.add_subcommand("qtm", "quasi-threshold mover local search");
    qtm_cmd->add_option("graph", graph_path)->required();
    qtm_cmd->add_option("--rounds", rounds, "maximum rounds (default 4)");
    qtm_cmd->add_flag("--until-stable", until_stable, "iterate until a round changes nothing");
    qtm_cmd->add_option("--seed", seed);
    qtm_cmd->add_option("--init", init)->check(CLI::IsMember({"heuristic", "trivial"}));
    qtm_cmd->add_option("--skeleton", skeleton_out);
    qtm_cmd->add_option("--edits", edits_out, "write the edit set (skeleton closure vs input)");

    auto* ng_cmd = app.add_subcommand("ng", "greedy baseline");
    ng_cmd->add_option("graph", graph_path)->required();
    ng_cmd->add_flag("--bst", use_bst, "refine the last edits with the exact solver");
    ng_cmd->add_option("--revert-depth", revert_depth);
    ng_cmd->add_flag("--freeze-edited", freeze_edited, "never re-edit a pair");
    ng_cmd->add_flag("--trace", trace, "print counters after each edit");
    ng_cmd->add_option("--edits", edits_out);

    auto* exact_cmd = app.add_subcommand("exact", "bounded search tree solver");
    exact_cmd->add_option("graph", graph_path)->required();
    exact_cmd->add_option("--kmax", kmax)->required();
    exact_cmd->add_option("--edits", edits_out);

    auto* gen_cmd = app.add_subcommand("generate", "planted-edit quasi-threshold instance");
    gen_cmd->add_option("--n", gen_n)->required();
    gen_cmd->add_option("--k", gen_k)->required();
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--out", out_prefix, "output prefix")->required();

    auto* bench_cmd = app.add_subcommand("bench", "seeded repetitions with permutations");
    bench_cmd->add_option("graph", graph_path)->required();
    bench_cmd->add_option("--algo", algo)->check(CLI::IsMember({"qtm", "ng", "bound"}));
    bench_cmd->add_option("--runs", runs);
    bench_cmd->add_option("--seed", seed);
    bench_cmd->add_option("--rounds", rounds);
    bench_cmd->add_flag("--until-stable", until_stable);
    bench_cmd->add_option("--init", init)->check(CLI::IsMember({"heuristic", "trivial"}));
    bench_cmd->add_flag("--bst", use_bst);
    bench_cmd->add_option("--revert-depth", revert_depth);

    auto* verify_cmd = app.add_subcommand("verify", "apply an edit set and recognize");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("--edits", edits_in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Summary out;
    out.as_json = as_json;

    try {
        if (rec->parsed()) {
            Graph g = load_edge_list_file(graph_path);
            RecognitionResult res = recognize(g);
            if (const auto* forest = std::get_if<SkeletonForest>(&res)) {
                std::cout << "quasi-threshold: yes\n";
                out.set("quasi_threshold", "yes");
                if (!skeleton_out.empty()) write_skeleton_file(*forest, skeleton_out);
            } else {
                const auto& cert = std::get<Certificate>(res);
                std::cout << "quasi-threshold: no\n";
                out.set("quasi_threshold", "no");
                out.set("certificate_kind", cert.kind == CertificateKind::p4 ? "P4" : "C4");
                out.set("certificate_nodes", {cert.nodes[0], cert.nodes[1], cert.nodes[2],
                                              cert.nodes[3]});
            }
        } else if (bound->parsed()) {
            Graph g = load_edge_list_file(graph_path);
            BoundResult res = lower_bound(g, seed, resort);
            out.set("bound", res.bound);
            if (show_pairs) {
                for (auto [u, v] : res.removed_pairs) {
                    std::cout << "pair " << u << ' ' << v << '\n';
                }
            }
        } else if (init_cmd->parsed()) {
            Graph g = load_edge_list_file(graph_path);
            SkeletonForest f = build_initial(g, init);
            out.set("edits", count_edits(g, f));
            if (!skeleton_out.empty()) write_skeleton_file(f, skeleton_out);
        } else if (qtm_cmd->parsed()) {
            Graph g = load_edge_list_file(graph_path);
            const double t0 = now_ms();
            QtmResult res = run_qtm(g, build_initial(g, init), until_stable ? 0 : rounds, seed);
            const double t1 = now_ms();
            out.set("initial_edits", res.initial_edits);
            out.set("edits", res.edits);
            out.set("rounds", res.rounds_used);
            out.set("round_edits", res.round_edits);
            out.set("time_ms", t1 - t0);
            if (!skeleton_out.empty()) write_skeleton_file(res.forest, skeleton_out);
            if (!edits_out.empty()) write_edit_list_file(edits_from_skeleton(g, res.forest), edits_out);
        } else if (ng_cmd->parsed()) {
            Graph g = load_edge_list_file(graph_path);
            NgOptions opts;
            opts.revert_depth = revert_depth;
            opts.use_bst = use_bst;
            opts.freeze_edited = freeze_edited;
            NgStats stats;
            const double t0 = now_ms();
            EditSet edits = ng_greedy(g, opts, &stats);
            const double t1 = now_ms();
            out.set("edits", edits.size());
            out.set("time_ms", t1 - t0);
            if (trace) {
                for (std::size_t i = 0; i < stats.counts_trace.size(); ++i) {
                    std::cout << "step " << i + 1 << " p4=" << stats.counts_trace[i].p4
                              << " c4=" << stats.counts_trace[i].c4 << '\n';
                }
            }
            if (!edits_out.empty()) {
                write_edit_list_file(edits, edits_out);
            } else {
                write_edit_list(edits, std::cout);
            }
        } else if (exact_cmd->parsed()) {
            Graph g = load_edge_list_file(graph_path);
            auto res = bst_solve(g, kmax);
            if (!res) {
                out.set("solved", "no");
            } else {
                out.set("solved", "yes");
                out.set("edits", res->size());
                if (!edits_out.empty()) {
                    write_edit_list_file(*res, edits_out);
                } else {
                    write_edit_list(*res, std::cout);
                }
            }
        } else if (gen_cmd->parsed()) {
            GenSpec spec;
            spec.n = static_cast<node>(gen_n);
            spec.seed = seed;
            spec.planted_k = gen_k;
            auto [qt, forest] = generate_qt(spec);
            auto [edited, planted] = plant_edits(qt, gen_k, seed + 1);
            write_edge_list_file(edited, out_prefix + ".edges");
            write_skeleton_file(forest, out_prefix + ".skel");
            write_edit_list_file(planted, out_prefix + ".edits");
            out.set("n", qt.node_count());
            out.set("m", edited.edge_count());
            out.set("planted_k", planted.size());
        } else if (bench_cmd->parsed()) {
            Graph g = load_edge_list_file(graph_path);
            RunStats stats;
            for (count i = 0; i < runs; ++i) {
                const std::uint64_t run_seed = seed + i;
                auto [pg, mapping] = permute_nodes(g, run_seed);
                const double t0 = now_ms();
                if (algo == "qtm") {
                    QtmResult res =
                        run_qtm(pg, build_initial(pg, init), until_stable ? 0 : rounds, run_seed);
                    stats.edits.push_back(static_cast<double>(res.edits));
                    stats.iterations.push_back(static_cast<double>(res.rounds_used));
                } else if (algo == "ng") {
                    NgOptions opts;
                    opts.revert_depth = revert_depth;
                    opts.use_bst = use_bst;
                    stats.edits.push_back(static_cast<double>(ng_greedy(pg, opts).size()));
                } else {
                    stats.edits.push_back(static_cast<double>(lower_bound(pg, run_seed).bound));
                }
                stats.times_ms.push_back(now_ms() - t0);
            }
            out.set("algo", algo);
            out.set("runs", runs);
            report_stats(out, stats);
        } else if (verify_cmd->parsed()) {
            Graph g = load_edge_list_file(graph_path);
            EditSet edits = read_edit_list_file(edits_in);
            Graph edited = apply_edits(g, edits);
            const bool ok = is_quasi_threshold(edited);
            out.set("edits", edits.size());
            out.set("quasi_threshold", ok ? "yes" : "no");
            std::cout << (ok ? "verification: yes\n" : "verification: no\n");
        }
        out.finish();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
