// Command-line front end: solve, play, bounds, sweep, construct, reduce,
// verify. Exit codes: 0 success, 2 usage, 3 budget-exceeded partial result,
// 4 verification failure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "liminal/bounds.hpp"
#include "liminal/json_io.hpp"
#include "liminal/reduction.hpp"
#include "liminal/solver.hpp"
#include "liminal/strategies.hpp"
#include "liminal/verify.hpp"
#include "liminal/witness.hpp"

using namespace liminal;

namespace {

constexpr int kExitOk = 0, kExitUsage = 2, kExitBudget = 3, kExitVerify = 4;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

struct SolveArgs {
    std::string graph, mode = "liminal", format = "text", pv_path;
    int k = 1;
    bool strict = false, no_memo = false, no_dominance = false;
    uint64_t budget_nodes = SolveOptions{}.node_budget;
    int threads = default_threads();
};

int cmd_solve(const SolveArgs& a) {
    Graph g = build_family(a.graph);
    SolveOptions opts;
    opts.strict_arsonist = a.strict;
    opts.use_memo = !a.no_memo;
    opts.use_dominance = !a.no_dominance;
    opts.node_budget = a.budget_nodes;
    opts.threads = a.threads;
    opts.graph_spec = a.graph;
    opts.emit_pv = !a.pv_path.empty();

    SolveResult r;
    std::string what;
    if (a.mode == "burning") {
        r = solve_burning(g, opts);
        what = "b";
    } else if (a.mode == "cooling") {
        r = solve_cooling(g, opts);
        what = "CL";
    } else {
        r = solve_liminal(g, a.k, opts);
        what = "b_" + std::to_string(a.k);
    }
    if (a.format == "json") {
        std::cout << "{\"graph\": \"" << a.graph << "\", \"mode\": \"" << a.mode
                  << "\", \"k\": " << a.k << ", \"complete\": " << (r.complete ? "true" : "false")
                  << ", \"value\": " << (r.complete ? std::to_string(r.value) : "null")
                  << ", \"nodes\": " << r.nodes << ", \"memo_entries\": " << r.memo_entries
                  << "}\n";
    } else if (r.complete) {
        std::cout << what << "(" << a.graph << ") = " << r.value << "  [" << r.nodes
                  << " nodes, " << r.memo_entries << " memo entries]\n";
    } else {
        std::cout << what << "(" << a.graph << ") incomplete: budget exceeded after " << r.nodes
                  << " nodes\n";
    }
    if (r.complete && r.pv) write_file(a.pv_path, transcript_to_json(*r.pv));
    return r.complete ? kExitOk : kExitBudget;
}

struct PlayArgs {
    std::string graph, sab = "basic-sab", ars = "greedy-ars:smallest", transcript_path,
                interactive;
    int k = 1;
    bool strict = false, allow_pass = false;
    uint64_t budget_nodes = SolveOptions{}.node_budget;
};

std::optional<int> prompt_vertex(const Graph& g, const std::string& what) {
    while (true) {
        std::cout << what << " (vertex index, or 'pass'): " << std::flush;
        std::string tok;
        if (!(std::cin >> tok)) return std::nullopt;
        if (tok == "pass") return std::nullopt;
        try {
            int v = std::stoi(tok);
            if (v >= 0 && v < g.n()) return v;
        } catch (...) {
        }
        std::cout << "  not a vertex\n";
    }
}

SaboteurStrategy interactive_saboteur() {
    SaboteurStrategy s;
    s.name = "human";
    s.reveal = [](const Graph& g, const GameState& st, int, const RevealOptions& ro) {
        std::cout << "round " << st.round << ": reveal " << ro.required
                  << " unlit vertices (pool:";
        ro.pool.for_each([&](int v) { std::cout << ' ' << v; });
        std::cout << ")\n";
        Bits out(g.n());
        while (out.count() < ro.required) {
            auto v = prompt_vertex(g, "  reveal");
            if (!v) continue;
            if (!ro.pool.test(*v) || out.test(*v)) {
                std::cout << "  illegal reveal\n";
                continue;
            }
            out.set(*v);
        }
        return out;
    };
    return s;
}

ArsonistStrategy interactive_arsonist() {
    ArsonistStrategy a;
    a.name = "human";
    a.burn = [](const Graph& g, const GameState& st,
                const Bits& selectable) -> std::optional<int> {
        std::cout << "round " << st.round << ": burn one of:";
        selectable.for_each([&](int v) { std::cout << ' ' << v; });
        std::cout << "\n";
        while (true) {
            auto v = prompt_vertex(g, "  burn");
            if (!v) {
                if (selectable.none()) return std::nullopt;
                std::cout << "  burning is compulsory\n";
                continue;
            }
            if (selectable.test(*v)) return v;
            std::cout << "  illegal burn\n";
        }
    };
    return a;
}

int cmd_play(const PlayArgs& a) {
    Graph g = build_family(a.graph);
    SaboteurStrategy sab = a.interactive == "saboteur" ? interactive_saboteur()
                                                       : parse_saboteur(a.sab, g, a.graph, a.k);
    ArsonistStrategy ars;
    if (a.interactive == "arsonist") ars = interactive_arsonist();
    else if (a.ars == "solver") {
        SolveOptions so;
        so.node_budget = a.budget_nodes;
        ars = solver_arsonist(g, a.k, so);
    } else {
        ars = parse_arsonist(a.ars, g, a.graph, a.k);
    }

    PlayOptions po;
    po.strict_arsonist = a.strict;
    po.allow_pass = a.allow_pass || ars.name == "eccentric-ars";
    po.graph_spec = a.graph;
    Transcript t = play(g, a.k, sab, ars, po);
    std::cout << "game length: " << t.length << " (" << sab.name << " vs " << ars.name << ")\n";
    if (!a.transcript_path.empty()) write_file(a.transcript_path, transcript_to_json(t));
    return kExitOk;
}

struct BoundsArgs {
    std::string graph;
    int k = 1;
    bool json = false;
    // optional scalars for the general/product entries
    std::optional<int> b, cl, diam, m, j, size_h, t, n_power, cl_product, cover;
    std::optional<int> d_special;
    bool solve_small = false;
};

int cmd_bounds(const BoundsArgs& a) {
    BoundReport rep;
    Graph g = build_family(a.graph);
    std::string spec = a.graph;

    std::optional<int> b = a.b, cl = a.cl;
    if (a.solve_small && g.n() <= 24) {
        if (!b) b = solve_burning(g).value;
        if (!cl) cl = solve_cooling(g).value;
    }
    for (auto& e : general_bounds(g.n(), a.k, b, cl)) rep.entries.push_back(e);

    if (spec.rfind("path:", 0) == 0)
        for (auto& e : path_bounds(g.n(), a.k)) rep.entries.push_back(e);
    if (spec.rfind("hypercube:", 0) == 0) {
        int n = std::stoi(spec.substr(10));
        for (auto& e : hypercube_bounds(n, a.k)) rep.entries.push_back(e);
    }
    if (auto dims = grid_dims_of_spec(spec); dims && dims->first == dims->second)
        for (auto& e : grid_bounds(dims->first, a.k)) rep.entries.push_back(e);

    if (a.j || a.size_h || a.m || a.t) {
        ProductQuery q;
        q.k = a.k;
        q.j = a.j;
        q.size_h = a.size_h;
        q.diam_g = a.diam;
        q.cl_g = a.cl;
        q.b_g = a.b;
        q.m = a.m;
        q.n_power = a.n_power;
        q.t = a.t;
        q.cl_product = a.cl_product;
        for (auto& e : product_bounds(q)) rep.entries.push_back(e);
    }
    if (a.d_special)
        for (auto& e : special_and_cover_bounds(g.n(), a.k, *a.d_special, true, a.cover))
            rep.entries.push_back(e);

    if (a.json) {
        std::cout << bound_report_to_json(rep);
    } else {
        for (const auto& e : rep.entries) {
            std::cout << (e.kind == BoundKind::Lower   ? "lower"
                          : e.kind == BoundKind::Upper ? "upper"
                                                       : "exact")
                      << "  " << e.theorem << " = " << e.value << " (int "
                      << e.tightened << ")" << (e.hypotheses_ok ? "" : "  [hypotheses fail]")
                      << (e.asymptotic ? "  [asymptotic]" : "");
            if (!e.notes.empty()) std::cout << "  -- " << e.notes;
            std::cout << "\n";
        }
        std::cout << (rep.consistent() ? "consistent\n" : "INCONSISTENT\n");
    }
    return kExitOk;
}

struct SweepArgs {
    int n = 100;
    std::string k_range = "1:361:10", out;
};

int cmd_sweep(const SweepArgs& a) {
    long long lo, hi, step;
    if (sscanf(a.k_range.c_str(), "%lld:%lld:%lld", &lo, &hi, &step) != 3 || step <= 0 ||
        lo < 1) {
        std::cerr << "bad --k-range, want A:B:STEP\n";
        return kExitUsage;
    }
    std::vector<long long> ks;
    for (long long k = lo; k <= hi; k += step) ks.push_back(k);
    auto rows = grid_sweep(a.n, ks);
    std::string csv = sweep_csv(rows);
    if (a.out.empty()) std::cout << csv;
    else write_file(a.out, csv);
    return kExitOk;
}

struct ConstructArgs {
    std::string kind;  // sperner | witness
    int n = 0, k = 0, d = -1, forced = -1;
    std::string graph, ground;
    uint64_t budget = 10'000'000;
};

int cmd_construct(const ConstructArgs& a) {
    if (a.kind == "sperner") {
        SpernerFamily fam;
        if (a.forced >= 0) {
            std::vector<int> ground;
            std::istringstream gs(a.ground);
            int e;
            while (gs >> e) ground.push_back(e);
            fam = rainbow_sperner_forced(ground, a.forced);
        } else {
            fam = rainbow_sperner(a.n);
        }
        auto rep = verify_sperner(fam);
        std::cout << "{\"sets\": \"" << fam.to_string() << "\", \"validation\": "
                  << (rep.pass ? "\"pass\"" : "\"fail\"") << "}\n";
        return rep.pass ? kExitOk : kExitVerify;
    }
    if (a.kind == "witness") {
        Graph g = build_family(a.graph);
        int d = a.d < 0 ? a.k : a.d;
        auto r = is_kd_special(g, a.k, d, a.budget);
        if (r.outcome == KdSpecialResult::Outcome::BudgetExceeded) {
            std::cout << "{\"outcome\": \"budget-exceeded\"}\n";
            return kExitBudget;
        }
        if (r.outcome == KdSpecialResult::Outcome::Refuted) {
            std::cout << "{\"outcome\": \"refuted\"}\n";
            return kExitOk;
        }
        std::cout << "{\"outcome\": \"witness\", \"parts\": [";
        for (size_t i = 0; i < r.witness->parts.size(); ++i) {
            std::cout << (i ? "," : "") << "[";
            auto vs = r.witness->parts[i].to_vector();
            for (size_t j2 = 0; j2 < vs.size(); ++j2) std::cout << (j2 ? "," : "") << vs[j2];
            std::cout << "]";
        }
        auto rep = validate_witness(g, *r.witness, true);
        std::cout << "], \"validation\": " << (rep.pass ? "\"pass\"" : "\"fail\"") << "}\n";
        return rep.pass ? kExitOk : kExitVerify;
    }
    std::cerr << "construct wants 'sperner' or 'witness'\n";
    return kExitUsage;
}

struct ReduceArgs {
    std::string qbf, out = "g.edges", meta = "g.json";
    int k = 2;
    bool certify = false;
    uint64_t budget_nodes = 50'000'000;
};

int cmd_reduce(const ReduceArgs& a) {
    QbfFormula f = parse_qdimacs_file(a.qbf);
    ReductionGraph rg = build_reduction(f, a.k);
    {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot write " + a.out);
        out << "# reduction of " << a.qbf << " at k=" << a.k << ", threshold "
            << rg.threshold << "\n";
        write_edge_list(out, rg.graph);
    }
    write_file(a.meta, reduction_meta_to_json(rg));
    auto rep = verify_reduction(rg);
    std::cout << "G': " << rg.graph.n() << " vertices, " << rg.graph.edge_count()
              << " edges, T=" << rg.T << ", threshold=" << rg.threshold
              << ", structural checks " << (rep.pass ? "pass" : "FAIL") << "\n";
    for (const auto& fmsg : rep.failures) std::cout << "  " << fmsg << "\n";
    if (a.certify) {
        bool truth = eval_qbf(rg.formula);
        CertificateResult cert = certify_reduction(rg, a.budget_nodes);
        std::cout << "formula is " << (truth ? "true" : "false") << "; schedule certificate ";
        if (!cert.complete) {
            std::cout << "exceeded budget after " << cert.nodes << " nodes\n";
            return kExitBudget;
        }
        std::cout << "value " << cert.value << " vs threshold " << rg.threshold << "\n";
    }
    return rep.pass ? kExitOk : kExitVerify;
}

struct VerifyArgs {
    std::vector<int> only;
    uint64_t seed = VerifyOptions{}.seed;
    bool json = false;
    int threads = default_threads();
};

int cmd_verify(const VerifyArgs& a) {
    VerifyOptions vo;
    vo.seed = a.seed;
    vo.only = a.only;
    vo.threads = a.threads;
    auto results = run_acceptance(vo);
    std::cout << (a.json ? acceptance_report_json(results) : acceptance_report_text(results));
    return acceptance_all_pass(results) ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-liminal burning: engine, exact solver, bounds, constructions, reduction"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "exact game values");
    solve->add_option("--graph", solve_args.graph, "family spec")->required();
    solve->add_option("--k", solve_args.k, "reveal size");
    solve->add_option("--mode", solve_args.mode, "liminal|burning|cooling")
        ->check(CLI::IsMember({"liminal", "burning", "cooling"}));
    solve->add_flag("--strict-arsonist", solve_args.strict);
    solve->add_flag("--no-memo", solve_args.no_memo);
    solve->add_flag("--no-dominance", solve_args.no_dominance);
    solve->add_option("--budget-nodes", solve_args.budget_nodes);
    solve->add_option("--threads", solve_args.threads);
    solve->add_option("--emit-pv", solve_args.pv_path, "write principal variation JSON");
    solve->add_option("--format", solve_args.format)->check(CLI::IsMember({"text", "json"}));

    PlayArgs play_args;
    auto* playc = app.add_subcommand("play", "run one game");
    playc->add_option("--graph", play_args.graph)->required();
    playc->add_option("--k", play_args.k);
    playc->add_option("--sab", play_args.sab, "saboteur strategy descriptor");
    playc->add_option("--ars", play_args.ars, "arsonist strategy descriptor (or 'solver')");
    playc->add_option("--interactive", play_args.interactive, "play a side yourself")
        ->check(CLI::IsMember({"saboteur", "arsonist"}));
    playc->add_flag("--strict-arsonist", play_args.strict);
    playc->add_flag("--allow-pass", play_args.allow_pass);
    playc->add_option("--budget-nodes", play_args.budget_nodes);
    playc->add_option("--emit-transcript", play_args.transcript_path);

    BoundsArgs bounds_args;
    auto* boundsc = app.add_subcommand("bounds", "closed-form bound report");
    boundsc->add_option("--graph", bounds_args.graph)->required();
    boundsc->add_option("--k", bounds_args.k);
    boundsc->add_flag("--json", bounds_args.json);
    boundsc->add_flag("--solve-small", bounds_args.solve_small,
                      "solve b and CL exactly when the graph is small");
    boundsc->add_option("--b", bounds_args.b);
    boundsc->add_option("--cl", bounds_args.cl);
    boundsc->add_option("--diam", bounds_args.diam);
    boundsc->add_option("--m", bounds_args.m, "max cooling-sequence length");
    boundsc->add_option("--j", bounds_args.j, "clique size in G box K_j");
    boundsc->add_option("--size-h", bounds_args.size_h);
    boundsc->add_option("--t", bounds_args.t, "disjoint clique copies");
    boundsc->add_option("--n-power", bounds_args.n_power);
    boundsc->add_option("--cl-product", bounds_args.cl_product);
    boundsc->add_option("--cover", bounds_args.cover, "partition-cover size T");
    boundsc->add_option("--d", bounds_args.d_special, "(k,d)-special d");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "grid sweep CSV");
    sweep->add_option("--n", sweep_args.n);
    sweep->add_option("--k-range", sweep_args.k_range, "A:B:STEP");
    sweep->add_option("--out", sweep_args.out);

    ConstructArgs cons_args;
    auto* cons = app.add_subcommand("construct", "combinatorial objects");
    cons->add_option("kind", cons_args.kind, "sperner|witness")->required();
    cons->add_option("--n", cons_args.n);
    cons->add_option("--k", cons_args.k);
    cons->add_option("--d", cons_args.d);
    cons->add_option("--forced", cons_args.forced);
    cons->add_option("--ground", cons_args.ground, "space-separated elements");
    cons->add_option("--graph", cons_args.graph);
    cons->add_option("--budget", cons_args.budget);

    ReduceArgs red_args;
    auto* red = app.add_subcommand("reduce", "3-QBF hardness reduction");
    red->add_option("--qbf", red_args.qbf)->required();
    red->add_option("--k", red_args.k);
    red->add_option("--out", red_args.out);
    red->add_option("--meta", red_args.meta);
    red->add_flag("--certify", red_args.certify);
    red->add_option("--budget-nodes", red_args.budget_nodes);

    VerifyArgs ver_args;
    auto* ver = app.add_subcommand("verify", "acceptance criteria");
    ver->add_option("--criterion", ver_args.only, "run selected criteria only");
    ver->add_option("--seed", ver_args.seed);
    ver->add_flag("--json", ver_args.json);
    ver->add_option("--threads", ver_args.threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(solve_args);
        if (*playc) return cmd_play(play_args);
        if (*boundsc) return cmd_bounds(bounds_args);
        if (*sweep) return cmd_sweep(sweep_args);
        if (*cons) return cmd_construct(cons_args);
        if (*red) return cmd_reduce(red_args);
        if (*ver) return cmd_verify(ver_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
