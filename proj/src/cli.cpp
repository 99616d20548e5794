#include "ucddp/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ucddp/bench.hpp"
#include "ucddp/dominance.hpp"
#include "ucddp/exact.hpp"
#include "ucddp/heuristics.hpp"
#include "ucddp/instance.hpp"
#include "ucddp/mip_export.hpp"
#include "ucddp/partition.hpp"

namespace ucddp::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

struct InstanceInput {
    std::string path;
    int orlib_n = 0;
    int orlib_index = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("instance", path, "instance file")->required();
        cmd->add_option("--orlib-n", orlib_n,
                        "read the file as an OR-Library benchmark with this task count");
        cmd->add_option("--orlib-index", orlib_index,
                        "1-based instance index inside an OR-Library file");
    }

    Instance load() const {
        std::ifstream in(path);
        if (!in)
            throw parse_error("cannot open file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (orlib_n > 0)
            return parse_orlib(buf.str(), orlib_n, orlib_index);
        return parse_native(buf.str());
    }
};

std::vector<std::uint8_t> parse_delta(const std::string& text, int n) {
    std::vector<std::uint8_t> delta;
    for (char c : text) {
        if (c == ',' || c == ' ')
            continue;
        if (c == '0')
            delta.push_back(0);
        else if (c == '1')
            delta.push_back(1);
        else
            throw parse_error(std::string("delta must be 0/1 digits, got '") + c + "'");
    }
    if (static_cast<int>(delta.size()) != n)
        throw parse_error("delta has " + std::to_string(delta.size()) +
                          " entries, instance has " + std::to_string(n) + " tasks");
    return delta;
}

IntRange parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw parse_error("range must be lo:hi, got " + text);
    IntRange r;
    r.lo = std::stoll(text.substr(0, colon));
    r.hi = std::stoll(text.substr(colon + 1));
    return r;
}

std::int64_t ms_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void write_output(const std::string& text, const std::string& output_path,
                  std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path);
    if (!file)
        throw parse_error("cannot write file: " + output_path);
    file << text;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"solver toolkit for single-machine scheduling around an "
                 "unrestrictive common due date"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance (native format)");
    int gen_n = 10;
    std::uint64_t gen_seed = 0;
    std::string gen_p = "1:20", gen_a = "1:10", gen_b = "1:10", gen_out;
    gen->add_option("--n", gen_n, "task count")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--p-range", gen_p, "processing time range lo:hi");
    gen->add_option("--a-range", gen_a, "earliness penalty range lo:hi");
    gen->add_option("--b-range", gen_b, "tardiness penalty range lo:hi");
    gen->add_option("-o,--output", gen_out, "write to file instead of stdout");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a partition");
    InstanceInput eval_input;
    eval_input.attach(eval);
    std::string eval_delta;
    eval->add_option("--delta", eval_delta, "0/1 early indicators, e.g. 1,0,1 or 101")
        ->required();

    // heur
    auto* heur = app.add_subcommand("heur", "multistart insert/swap local search");
    InstanceInput heur_input;
    heur_input.attach(heur);
    int heur_restarts = 4;
    std::uint64_t heur_seed = 0;
    std::string heur_start = "multi";
    heur->add_option("--restarts", heur_restarts, "number of random restarts");
    heur->add_option("--seed", heur_seed, "random seed");
    heur->add_option("--start", heur_start,
                     "start point: multi, all-early or half-round")
        ->check(CLI::IsMember({"multi", "all-early", "half-round"}));

    // solve
    auto* solve = app.add_subcommand("solve", "exact solve");
    InstanceInput solve_input;
    solve_input.attach(solve);
    bool use_brute = false, use_bnb = false, solve_verbose = false;
    double solve_time_limit = 0.0, solve_gap_limit = 0.0;
    solve->add_flag("--brute-force", use_brute, "enumerate all partitions");
    solve->add_flag("--bnb", use_bnb, "branch and bound (default)");
    solve->add_option("--time-limit", solve_time_limit, "time limit in seconds");
    solve->add_option("--gap-limit", solve_gap_limit, "relative gap limit in [0,1]");
    solve->add_flag("--verbose", solve_verbose, "report node counts on stderr");

    // check
    auto* check = app.add_subcommand("check", "report violated dominance inequalities");
    InstanceInput check_input;
    check_input.attach(check);
    std::string check_delta;
    check->add_option("--delta", check_delta, "0/1 early indicators")->required();

    // export-lp
    auto* export_lp = app.add_subcommand("export-lp", "write an LP-format model");
    InstanceInput export_input;
    export_input.attach(export_lp);
    std::string export_variant = "f2", export_out;
    export_lp->add_option("--variant", export_variant, "formulation: f2, fi, fs or fis")
        ->check(CLI::IsMember({"f2", "fi", "fs", "fis"}));
    export_lp->add_option("-o,--output", export_out,
                          "output file, or directory/ for <instance>_<variant>.lp");

    // bench
    auto* bench = app.add_subcommand("bench", "benchmark table over instance files");
    std::vector<std::string> bench_paths;
    std::string bench_methods = "bnb,half-round+ls";
    double bench_time_limit = 0.0, bench_gap_limit = 0.0;
    std::uint64_t bench_seed = 0;
    int bench_restarts = 4, bench_orlib_n = 0;
    std::string bench_format = "csv";
    bench->add_option("instances", bench_paths, "instance files");
    bench->add_option("--methods", bench_methods,
                      "comma list of brute, bnb, heur, half-round+ls");
    bench->add_option("--time-limit", bench_time_limit, "per-solve time limit in seconds");
    bench->add_option("--gap-limit", bench_gap_limit, "relative gap limit in [0,1]");
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("--restarts", bench_restarts, "restarts for the heur method");
    bench->add_option("--orlib-n", bench_orlib_n,
                      "treat the files as OR-Library benchmarks with this task count");
    bench->add_option("--format", bench_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (gen->parsed()) {
            const Instance inst = generate_random(gen_n, gen_seed, parse_range(gen_p),
                                                  parse_range(gen_a), parse_range(gen_b));
            write_output(serialize_native(inst), gen_out, out);
            return kExitOk;
        }
        if (eval->parsed()) {
            const Instance inst = eval_input.load();
            const Partition part{parse_delta(eval_delta, inst.n())};
            out << solution_json(inst, part).dump() << "\n";
            return kExitOk;
        }
        if (heur->parsed()) {
            const Instance inst = heur_input.load();
            const auto start = std::chrono::steady_clock::now();
            HeuristicResult result;
            if (heur_start == "multi")
                result = multistart(inst, heur_restarts, heur_seed);
            else if (heur_start == "all-early")
                result = local_search(inst, Partition::all_early(inst.n()).delta,
                                      "all-early");
            else
                result = local_search(inst, half_round_start(inst), "half-round");
            out << heuristic_json(result, ms_since(start)).dump() << "\n";
            return kExitOk;
        }
        if (solve->parsed()) {
            const Instance inst = solve_input.load();
            if (use_brute && use_bnb)
                throw parse_error("choose one of --brute-force and --bnb");
            if (use_brute) {
                const BruteForceResult res = brute_force(inst);
                out << solution_json(inst, Partition{res.delta}).dump() << "\n";
                return kExitOk;
            }
            SolveLimits limits;
            limits.time_limit_ms =
                static_cast<std::int64_t>(solve_time_limit * 1000.0);
            limits.gap_limit = solve_gap_limit;
            if (solve_verbose)
                limits.progress = [&err](std::int64_t nodes, std::int64_t incumbent) {
                    err << "nodes " << nodes << ", incumbent " << incumbent << "\n";
                };
            const SolveResult res = branch_and_bound(inst, limits);
            nlohmann::ordered_json json = solution_json(inst, Partition{res.delta});
            json["stats"] = stats_json(res);
            out << json.dump() << "\n";
            const bool met_request =
                res.stats.proven_optimal || res.gap <= limits.gap_limit;
            return met_request ? kExitOk : kExitLimit;
        }
        if (check->parsed()) {
            const Instance inst = check_input.load();
            const auto delta = parse_delta(check_delta, inst.n());
            out << violations_json(check_dominance(inst, delta)).dump() << "\n";
            return kExitOk;
        }
        if (export_lp->parsed()) {
            const Instance inst = export_input.load();
            const FormulationVariant variant = variant_from_string(export_variant);
            std::string target = export_out;
            if (!target.empty() && target.back() != '/' &&
                std::filesystem::is_directory(target))
                target += '/';
            if (!target.empty() && target.back() == '/') {
                std::string stem = export_input.path;
                const auto slash = stem.find_last_of("/\\");
                if (slash != std::string::npos)
                    stem = stem.substr(slash + 1);
                const auto dot = stem.find_last_of('.');
                if (dot != std::string::npos && dot > 0)
                    stem = stem.substr(0, dot);
                target += stem + "_" + export_variant + ".lp";
            }
            write_output(emit_lp(build_model(inst, variant)), target, out);
            return kExitOk;
        }
        if (bench->parsed()) {
            BenchOptions options;
            std::istringstream methods(bench_methods);
            std::string method;
            while (std::getline(methods, method, ','))
                if (!method.empty())
                    options.methods.push_back(method);
            options.time_limit_ms =
                static_cast<std::int64_t>(bench_time_limit * 1000.0);
            options.gap_limit = bench_gap_limit;
            options.seed = bench_seed;
            options.restarts = bench_restarts;
            options.orlib_n = bench_orlib_n;
            const std::vector<BenchRow> rows = bench_report(bench_paths, options);
            for (const BenchRow& row : rows)
                if (!row.error.empty())
                    err << row.label << " [" << row.method << "]: " << row.error << "\n";
            if (bench_format == "json") {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const BenchRow& row : rows) {
                    nlohmann::ordered_json item;
                    item["label"] = row.label;
                    item["n"] = row.n;
                    item["method"] = row.method;
                    if (row.lb) item["lb"] = *row.lb;
                    if (row.ub) item["ub"] = *row.ub;
                    if (row.lgap) item["lgap"] = *row.lgap;
                    if (row.ugap) item["ugap"] = *row.ugap;
                    if (row.nodes) item["nodes"] = *row.nodes;
                    if (row.ms) item["ms"] = *row.ms;
                    if (!row.error.empty()) item["error"] = row.error;
                    arr.push_back(item);
                }
                out << arr.dump() << "\n";
            } else {
                out << bench_csv(rows);
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInput;
    }
    err << "no subcommand given\n";
    return kExitInput;
}

} // namespace ucddp::cli
