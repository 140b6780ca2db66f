#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "partree/dispatch.hpp"
#include "partree/exact.hpp"
#include "partree/families.hpp"
#include "partree/io.hpp"
#include "partree/tree_opt.hpp"
#include "partree/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace partree;

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitIncompatible = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct InputOptions {
    std::string input;   // edge-list file
    std::string family;  // family name as in FamilySpec
    std::string spec;    // FamilySpec json file
    int n = 0, m = 0, k = 0;
    std::vector<int> sizes;
    std::uint64_t seed = 0;
};

void add_input_flags(CLI::App* cmd, InputOptions& io) {
    cmd->add_option("--input", io.input, "edge-list file ('u v' lines, '#' comments, 'v <id>')");
    cmd->add_option("--family", io.family,
                    "instance family: path|star|complete|caterpillar|broomstick|random-tree|"
                    "random-connected-graph");
    cmd->add_option("--spec", io.spec, "FamilySpec json file");
    cmd->add_option("--n", io.n, "vertex count for path/star/complete/random families");
    cmd->add_option("--m", io.m, "edge count for random-connected-graph");
    cmd->add_option("--k", io.k, "parameter k for broomstick");
    cmd->add_option("--sizes", io.sizes, "star sizes for caterpillar")->delimiter(',');
    cmd->add_option("--seed", io.seed, "seed for the random families");
}

Graph load_graph(const InputOptions& io) {
    int sources = !io.input.empty() + !io.family.empty() + !io.spec.empty();
    if (sources != 1)
        throw std::invalid_argument("need exactly one of --input, --family, --spec");
    if (!io.input.empty()) return parse_edgelist(read_file(io.input));
    if (!io.spec.empty()) return graph_from_family_spec(json::parse(read_file(io.spec)));
    json spec;
    spec["family"] = io.family;
    json params = json::object();
    if (io.family == "caterpillar") {
        params["sizes"] = io.sizes;
    } else if (io.family == "broomstick") {
        params["k"] = io.k;
        if (io.k == 2)
            std::cerr << "warning: broomstick k=2 is below the intended family range (k >= 3)\n";
    } else {
        params["n"] = io.n;
        if (io.family == "random-connected-graph") params["m"] = io.m;
    }
    spec["params"] = params;
    spec["seed"] = io.seed;
    return graph_from_family_spec(spec);
}

int cmd_compute(const InputOptions& io, const std::string& measure_name_arg,
                const std::string& algorithm_arg, const std::string& emit_tree,
                const std::string& emit_dot, bool as_json, std::int64_t budget) {
    Graph g = load_graph(io);
    MeasureKind measure = measure_from_name(measure_name_arg);
    Algorithm algorithm = algorithm_from_name(algorithm_arg);
    SolveOptions opts;
    if (budget > 0) opts.subset_budget = budget;

    SolveResult r = solve_with(g, measure, algorithm, opts);
    if (!emit_tree.empty()) write_file(emit_tree, tree_to_json(r.witness).dump(2) + "\n");
    if (!emit_dot.empty()) write_file(emit_dot, tree_to_dot(g, r.witness));

    if (as_json) {
        json out = solve_result_to_json(r);
        out["n"] = g.n();
        out["m"] = g.m();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << measure_name(r.measure) << " = " << r.value << "\n"
                  << "algorithm: " << r.algorithm << "\n"
                  << "n: " << g.n() << "  m: " << g.m() << "\n"
                  << "subproblems: " << r.stats.subproblems
                  << "  elapsed: " << r.stats.elapsed_seconds << "s\n";
        if (!emit_tree.empty()) std::cout << "witness: " << emit_tree << "\n";
    }
    return 0;
}

int cmd_generate(const InputOptions& io, const std::string& out_path) {
    Graph g = load_graph(io);
    std::string text = to_edgelist(g);
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_bench(const std::string& corpus_dir, const std::vector<std::string>& measures,
              const std::string& out_path, std::int64_t budget) {
    SolveOptions opts;
    if (budget > 0) opts.subset_budget = budget;

    std::vector<fs::path> files;
    if (!corpus_dir.empty() && fs::exists(corpus_dir))
        for (const auto& entry : fs::directory_iterator(corpus_dir))
            if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::ostringstream csv;
    csv << "instance,measure,n,m,exact,balanced,ratio,local_search_value,"
           "exact_seconds,balanced_seconds,local_search_seconds,status\n";

    for (const fs::path& file : files) {
        Graph g = parse_edgelist(read_file(file.string()));
        bool is_tree = g.classify().is_tree;
        for (const std::string& mname : measures) {
            MeasureKind measure = measure_from_name(mname);
            csv << file.filename().string() << "," << mname << "," << g.n() << "," << g.m()
                << ",";
            bool approx_measure = measure == MeasureKind::EptSum || measure == MeasureKind::Dc;
            if (!is_tree && approx_measure) {
                csv << ",,,,,,,skipped\n";
                continue;
            }
            SolveResult exact = solve_with(g, measure, Algorithm::Auto, opts);
            csv << exact.value << ",";
            if (approx_measure && is_tree) {
                SolveResult bal = solve_with(g, measure, Algorithm::Balanced, opts);
                SolveResult ls = solve_with(g, measure, Algorithm::LocalSearch, opts);
                if (bal.value > 2 * exact.value)
                    throw std::logic_error("2-approximation violated on " +
                                           file.filename().string());
                csv << bal.value << ","
                    << (static_cast<double>(bal.value) / static_cast<double>(exact.value)) << ","
                    << ls.value << "," << exact.stats.elapsed_seconds << ","
                    << bal.stats.elapsed_seconds << "," << ls.stats.elapsed_seconds << ",ok\n";
            } else {
                csv << ",,," << exact.stats.elapsed_seconds << ",,,ok\n";
            }
        }
    }
    if (out_path.empty() || out_path == "-")
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return 0;
}

int cmd_verify(const std::string& level, bool as_json) {
    VerifyLevel lv;
    if (level == "quick")
        lv = VerifyLevel::Quick;
    else if (level == "full")
        lv = VerifyLevel::Full;
    else
        throw std::invalid_argument("verify level must be quick or full");

    auto results = run_verification(lv, as_json ? nullptr : &std::cout);
    bool all_passed = true;
    json out = json::array();
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        out.push_back({{"name", r.name},
                       {"passed", r.passed},
                       {"cases", r.cases},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    if (!as_json)
        std::cout << (all_passed ? "verification passed" : "verification FAILED") << "\n";
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nested-decomposition graph parameters: exact solvers, tree DPs, "
                 "balanced-cut approximation and brute-force verification"};
    app.require_subcommand(1);

    InputOptions compute_io, generate_io;
    std::string measure = "ept-sum", algorithm = "auto";
    std::string emit_tree, emit_dot, generate_out, corpus_dir, bench_out;
    std::vector<std::string> bench_measures{"ept-sum"};
    std::string verify_level = "quick";
    bool compute_json = false, verify_json = false;
    std::int64_t budget = 0;

    CLI::App* compute = app.add_subcommand("compute", "compute a parameter on one instance");
    add_input_flags(compute, compute_io);
    compute->add_option("--measure", measure, "vpt-sum|vpt-max|ept-sum|ept-max|dc");
    compute->add_option("--algorithm", algorithm,
                        "auto|exact|caterpillar|bounded-spine|balanced|local-search");
    compute->add_option("--emit-tree", emit_tree, "write the witness tree as json");
    compute->add_option("--emit-dot", emit_dot, "write the witness tree as dot");
    compute->add_flag("--json", compute_json, "machine-readable output");
    compute->add_option("--budget", budget, "subset budget for the exact solvers");

    CLI::App* generate = app.add_subcommand("generate", "write a family instance as an edge list");
    add_input_flags(generate, generate_io);
    generate->add_option("--out", generate_out, "output file ('-' for stdout)");

    CLI::App* bench = app.add_subcommand("bench", "run exact/balanced/local-search over a corpus");
    bench->add_option("--corpus", corpus_dir, "directory of edge-list files")->required();
    bench->add_option("--measures", bench_measures, "measures to benchmark")->delimiter(',');
    bench->add_option("--out", bench_out, "output csv ('-' for stdout)");
    bench->add_option("--budget", budget, "subset budget for the exact solvers");

    CLI::App* verify = app.add_subcommand("verify", "run the self-verification suites");
    verify->add_option("--level", verify_level, "quick|full");
    verify->add_flag("--json", verify_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return cmd_compute(compute_io, measure, algorithm, emit_tree, emit_dot, compute_json,
                               budget);
        if (generate->parsed()) return cmd_generate(generate_io, generate_out);
        if (bench->parsed()) return cmd_bench(corpus_dir, bench_measures, bench_out, budget);
        if (verify->parsed()) return cmd_verify(verify_level, verify_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IncompatibleAlgorithm& e) {
        std::cerr << "incompatible algorithm: " << e.what() << "\n";
        return kExitIncompatible;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
