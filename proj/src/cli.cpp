#include "regfactor/cli.hpp"

#include "regfactor/connectivity.hpp"
#include "regfactor/errors.hpp"
#include "regfactor/factor.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/graph_io.hpp"
#include "regfactor/random.hpp"
#include "regfactor/report_json.hpp"
#include "regfactor/verifier.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

namespace regfactor {

namespace {

struct RunConfig {
    std::string family;
    std::string mode;
    std::string input;
    std::string output;
    std::string format = "mgf";
    std::size_t r = 1, k = 1, t = 1;
    std::size_t n = 10, d = 3;
    std::size_t t_size = 1, s_size = 0, blisters = 0, extra = 0, bridges = 0;
    std::size_t trials = 0, instances = 10, jobs = 1;
    std::optional<std::size_t> ell;
    std::optional<std::size_t> bsw_k;
    bool oracle = false;
    std::size_t oracle_cap = 14;
    std::uint64_t seed = 0;
};

Json graph_summary(const Multigraph& g) {
    const auto br = bridges(g);
    auto deg = g.regular_degree();
    return Json{{"n", g.num_vertices()},
                {"m", g.num_edges()},
                {"regularDegree", deg ? Json(*deg) : Json(nullptr)},
                {"bridges", br.size()}};
}

std::string render(const Multigraph& g, const std::string& format) {
    if (format == "dot")
        return write_dot(g);
    if (format == "graph6")
        return write_graph6(g) + "\n";
    return write_mgf(g);
}

int cmd_generate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    Multigraph g;
    Json extra = Json::object();
    const auto& f = c.family;
    if (f == "sylvester") {
        g = sylvester_extremal(c.r, c.k);
    } else if (f == "extremal") {
        auto built = general_extremal({c.r, c.k, c.t_size, c.s_size, c.blisters, c.extra}, c.seed);
        g = std::move(built.graph);
        extra = Json{{"R", vertex_list(built.r_set)},
                     {"S", vertex_list(built.s_set)},
                     {"T", vertex_list(built.t_set)}};
    } else if (f == "bsw") {
        g = bsw_graph({c.r, c.t});
    } else if (f == "random-regular") {
        g = random_regular_multigraph(c.n, c.d, c.seed);
    } else if (f == "bridge-tree") {
        g = random_bridge_tree(c.r, c.bridges, c.seed);
    } else if (f == "complete") {
        g = complete_graph(c.n);
    } else if (f == "cycle") {
        g = cycle_graph(c.n);
    } else if (f == "petersen") {
        g = petersen_graph();
    }

    const std::string text = render(g, c.format);
    Json summary{{"family", f}};
    summary.update(graph_summary(g));
    if (!extra.empty())
        summary["partition"] = extra;
    if (c.output.empty()) {
        out << text;
        err << summary.dump() << "\n";
    } else {
        std::ofstream file(c.output, std::ios::binary);
        if (!file)
            throw ParseError(0, "cannot write '" + c.output + "'");
        file << text;
        out << summary.dump() << "\n";
    }
    return exit_pass;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
    if (!c.ell)
        throw DomainError("check needs --k or --ell");
    const std::size_t ell = *c.ell;
    const Multigraph g = load_graph_file(c.input);

    // Refuse before doing any work so that an oversized oracle run fails fast.
    if (c.oracle && g.num_vertices() > c.oracle_cap)
        throw SizeCapError("graph has " + std::to_string(g.num_vertices()) +
                           " vertices, oracle cap is " + std::to_string(c.oracle_cap));

    Json j{{"input", c.input}};
    j.update(graph_summary(g));
    j["bridgeEdges"] = bridges(g);
    j["ell"] = ell;
    auto factor = find_factor(g, ell);
    j["factorFound"] = factor.has_value();
    int code = exit_pass;
    if (factor) {
        j["factor"] = factor->edges;
        if (!is_factor(g, *factor))
            code = exit_theorem_failure;
    } else if (auto w = find_tutte_witness(g, ell)) {
        j["witness"] = to_json(*w);
    }
    if (c.oracle) {
        auto w = exhaustive_tutte_oracle(g, ell, {c.oracle_cap});
        j["oracle"] = Json{{"witness", w ? to_json(*w) : Json(nullptr)},
                           {"agrees", w.has_value() != factor.has_value()}};
        if (w.has_value() == factor.has_value())
            code = exit_theorem_failure;
    }
    out << j.dump() << "\n";
    return code;
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
    const Multigraph g = load_graph_file(c.input);
    Json j{{"input", c.input}};
    j.update(graph_summary(g));
    j["bridgeEdges"] = bridges(g);
    j["loops"] = g.has_loops();
    j["simple"] = g.is_simple();
    j["minDegree"] = g.num_vertices() ? g.min_degree() : 0;
    j["connected"] = is_connected(g);
    j["components"] = components(g).size();
    if (g.num_vertices() >= 2) {
        j["edgeConnectivity"] = edge_connectivity(g);
        j["vertexConnectivity"] =
            g.has_loops() ? Json(nullptr) : Json(vertex_connectivity(g));
    }
    if (c.ell) {
        j["ell"] = *c.ell;
        j["factorDeficiency"] =
            g.num_vertices() && g.min_degree() >= *c.ell ? Json(factor_deficiency(g, *c.ell))
                                                          : Json(nullptr);
    }
    out << j.dump() << "\n";
    return exit_pass;
}

// Runs count jobs on up to `jobs` threads; results keep index order.
std::vector<VerificationReport>
run_batch(std::size_t count, std::size_t jobs, const std::string& check,
          const std::function<VerificationReport(std::size_t)>& make) {
    std::vector<VerificationReport> reports(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                reports[i] = make(i);
            } catch (const std::exception& e) {
                VerificationReport rep;
                rep.check = check;
                rep.instance = "#" + std::to_string(i);
                rep.notes.push_back(e.what());
                reports[i] = std::move(rep);
            }
        }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < jobs; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    return reports;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    std::vector<VerificationReport> reports;
    const std::string& m = c.mode;
    if (m == "main") {
        if (!c.input.empty()) {
            reports.push_back(verify_main_theorem(load_graph_file(c.input), c.r, c.k, c.input));
        } else {
            main_sweep_instance(c.r, c.k, 0, c.seed); // validates (r,k) before fanning out
            const std::size_t trials = c.trials ? c.trials : 200;
            reports = run_batch(trials, c.jobs, m, [&](std::size_t i) {
                auto in = main_sweep_instance(c.r, c.k, i, c.seed);
                return verify_main_theorem(in.graph, c.r, c.k, in.name);
            });
        }
    } else if (m == "charzn") {
        if (!c.input.empty()) {
            reports.push_back(verify_characterization(load_graph_file(c.input), c.r, c.k, c.input));
        } else {
            const auto grid = extremal_grid(c.r, c.k);
            const std::size_t controls = c.trials ? c.trials : 5;
            reports = run_batch(grid.size() + controls, c.jobs, m, [&](std::size_t i) {
                if (i < grid.size())
                    return verify_extremal_instance(grid[i], c.seed);
                auto ctl = near_extremal_control(c.r, c.k, derive_seed(c.seed, i));
                if (!ctl)
                    throw ConstructionError("no control graph with a factor found");
                return verify_characterization(ctl->graph, c.r, c.k, ctl->name);
            });
        }
    } else if (m == "bsw") {
        std::vector<std::size_t> ks;
        if (c.bsw_k)
            ks.push_back(*c.bsw_k);
        else
            for (std::size_t k = 1; 2 * k <= 2 * c.r + 1; ++k)
                ks.push_back(k);
        bsw_construction({c.r, c.t}); // validates (r,t)
        reports = run_batch(ks.size(), c.jobs, m,
                            [&](std::size_t i) { return verify_bsw({c.r, c.t}, ks[i]); });
    } else if (m == "parity") {
        const std::size_t trials = c.trials ? c.trials : 1000;
        if (!c.input.empty()) {
            auto rep = parity_audit(load_graph_file(c.input), c.k, trials, c.seed);
            rep.instance = c.input;
            reports.push_back(std::move(rep));
        } else {
            reports = run_batch(c.instances, c.jobs, m, [&](std::size_t i) {
                Rng rng(derive_seed(c.seed, i));
                const std::size_t n = 2 + 2 * rng.below(7);
                const std::uint64_t sub = rng.next();
                auto g = random_regular_multigraph(n, 2 * c.r + 1, sub);
                auto rep = parity_audit(g, c.k, trials, sub);
                rep.r = c.r;
                rep.instance = "config n=" + std::to_string(n) + " d=" +
                               std::to_string(2 * c.r + 1) + " seed=" + std::to_string(sub);
                return rep;
            });
        }
    }

    bool all = true;
    for (const auto& rep : reports) {
        out << to_json(rep).dump() << "\n";
        all = all && rep.pass;
    }
    return all ? exit_pass : exit_theorem_failure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide, construct and certify 2k-factors of regular multigraphs"};
    app.name(args.empty() ? "regfactor" : args[0]);
    app.require_subcommand(1);
    RunConfig c;

    auto* gen = app.add_subcommand("generate", "Write a generated graph");
    gen->add_option("family", c.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"sylvester", "extremal", "bsw", "random-regular", "bridge-tree",
                               "complete", "cycle", "petersen"}));
    gen->add_option("--r", c.r, "Degree parameter: graphs are (2r+1)-regular");
    gen->add_option("--k", c.k, "Factor parameter: 2k-factors");
    gen->add_option("--t", c.t, "BSW connectivity parameter (1 <= t < r)");
    gen->add_option("--tsize", c.t_size, "Extremal: |T|");
    gen->add_option("--ssize", c.s_size, "Extremal: |S|");
    gen->add_option("--blisters", c.blisters, "Extremal: number of blistered S-T edges");
    gen->add_option("--extra", c.extra, "Extremal: extra K_{2r+2} components");
    gen->add_option("--bridges", c.bridges, "Bridge tree: number of cut-edges");
    gen->add_option("--n", c.n, "Number of vertices");
    gen->add_option("--d", c.d, "Degree for random-regular");
    gen->add_option("--seed", c.seed, "Random seed");
    gen->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"mgf", "dot", "graph6"}));
    gen->add_option("-o,--output", c.output, "Output file (default: stdout, summary to stderr)");

    auto* chk = app.add_subcommand("check", "Decide whether an input graph has an l-factor");
    chk->add_option("input", c.input, "Graph file (mgf or graph6)")->required();
    auto* chk_k = chk->add_option("--k", c.k, "Look for a 2k-factor");
    auto* chk_ell = chk->add_option("--ell", c.ell, "Look for an l-factor");
    chk_k->excludes(chk_ell);
    chk->add_flag("--oracle", c.oracle, "Also run the exhaustive 3^n Tutte oracle");
    chk->add_option("--oracle-cap", c.oracle_cap, "Vertex cap for the oracle")
        ->check(CLI::Range(1, 24));

    auto* ana = app.add_subcommand("analyze", "Structural report: bridges, connectivity");
    ana->add_option("input", c.input, "Graph file (mgf or graph6)")->required();
    ana->add_option("--ell", c.ell, "Also report the l-factor deficiency");

    auto* ver = app.add_subcommand("verify", "Theorem checks, one JSON report per line");
    ver->add_option("mode", c.mode, "main | charzn | bsw | parity")
        ->required()
        ->check(CLI::IsMember({"main", "charzn", "bsw", "parity"}));
    ver->add_option("--r", c.r, "Degree parameter: graphs are (2r+1)-regular");
    auto* ver_k = ver->add_option("--k", c.k, "Factor parameter: 2k-factors");
    ver->add_option("--t", c.t, "BSW connectivity parameter");
    ver->add_option("--trials", c.trials,
                    "main: instances (200); charzn: controls (5); parity: pairs per graph (1000)");
    ver->add_option("--instances", c.instances, "parity: number of random graphs");
    ver->add_option("--seed", c.seed, "Random seed");
    ver->add_option("--jobs", c.jobs, "Worker threads; output order is fixed")
        ->check(CLI::PositiveNumber);
    ver->add_option("--input", c.input, "Verify a single graph file instead of a sweep");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (chk->parsed())
            c.ell = c.ell ? *c.ell : 2 * c.k;
        if (ver->parsed() && c.mode == "bsw" && ver_k->count())
            c.bsw_k = c.k;
        if (gen->parsed())
            return cmd_generate(c, out, err);
        if (chk->parsed())
            return cmd_check(c, out);
        if (ana->parsed())
            return cmd_analyze(c, out);
        return cmd_verify(c, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const SizeCapError& e) {
        err << "error: size cap: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

} // namespace regfactor
