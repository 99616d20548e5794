#include "ucddp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ucddp/exact.hpp"
#include "ucddp/heuristics.hpp"
#include "ucddp/partition.hpp"

namespace ucddp {

namespace {

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string path_stem(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0)
        name = name.substr(0, dot);
    return name;
}

double ratio_gap(std::int64_t distance, std::int64_t reference) {
    if (reference == 0)
        return 0.0; // both bounds are exact at zero
    return static_cast<double>(distance) / static_cast<double>(reference);
}

std::vector<BenchRow> run_methods(const std::string& label, const Instance& inst,
                                  const BenchOptions& options) {
    std::vector<BenchRow> rows;
    std::optional<std::int64_t> opt;
    for (const std::string& method : options.methods) {
        BenchRow row;
        row.label = label;
        row.n = inst.n();
        row.method = method;
        Clock clock;
        if (method == "brute") {
            if (inst.n() > 24) {
                row.error = "brute force guard: n > 24";
            } else {
                const BruteForceResult res = brute_force(inst);
                row.lb = res.penalty;
                row.ub = res.penalty;
                row.ms = clock.ms();
                opt = res.penalty;
            }
        } else if (method == "bnb") {
            SolveLimits limits;
            limits.time_limit_ms = options.time_limit_ms;
            limits.gap_limit = options.gap_limit;
            const SolveResult res = branch_and_bound(inst, limits);
            row.lb = res.bound;
            row.ub = res.penalty;
            row.nodes = res.stats.nodes;
            row.ms = clock.ms();
            if (res.stats.proven_optimal && !opt)
                opt = res.penalty;
        } else if (method == "heur") {
            const HeuristicResult res =
                multistart(inst, options.restarts, options.seed);
            row.ub = res.penalty;
            row.ms = clock.ms();
        } else if (method == "half-round+ls") {
            const HeuristicResult res =
                local_search(inst, half_round_start(inst), "half-round");
            row.ub = res.penalty;
            row.ms = clock.ms();
        } else {
            row.error = "unknown method";
        }
        rows.push_back(std::move(row));
    }

    std::optional<std::int64_t> best_ub;
    for (const BenchRow& row : rows)
        if (row.ub && (!best_ub || *row.ub < *best_ub))
            best_ub = row.ub;

    for (BenchRow& row : rows) {
        if (row.lb) {
            if (opt) {
                row.lgap = ratio_gap(*opt - *row.lb, *opt);
            } else if (best_ub) {
                row.lgap = ratio_gap(*best_ub - *row.lb, *best_ub);
                row.lgap_star = true;
            }
        }
        if (row.ub) {
            if (opt) {
                row.ugap = ratio_gap(*row.ub - *opt, *opt);
            } else if (best_ub) {
                row.ugap = ratio_gap(*row.ub - *best_ub, *best_ub);
                row.ugap_star = true;
            }
        }
    }
    return rows;
}

} // namespace

std::vector<BenchRow> bench_report(const std::vector<std::string>& instance_paths,
                                   const BenchOptions& options) {
    std::vector<BenchRow> rows;
    for (const std::string& path : instance_paths) {
        std::ifstream in(path);
        std::ostringstream buf;
        if (in)
            buf << in.rdbuf();
        const std::string text = buf.str();

        auto emit_error = [&](const std::string& label, const std::string& message) {
            for (const std::string& method : options.methods) {
                BenchRow row;
                row.label = label;
                row.method = method;
                row.error = message;
                rows.push_back(std::move(row));
            }
        };

        if (!in) {
            emit_error(path_stem(path), "cannot open file");
            continue;
        }
        try {
            if (options.orlib_n > 0) {
                const int count = orlib_instance_count(text, options.orlib_n);
                for (int k = 1; k <= count; ++k) {
                    const Instance inst = parse_orlib(text, options.orlib_n, k);
                    const std::string label = path_stem(path) + "#" + std::to_string(k);
                    auto instance_rows = run_methods(label, inst, options);
                    rows.insert(rows.end(), instance_rows.begin(), instance_rows.end());
                }
            } else {
                const Instance inst = parse_native(text);
                auto instance_rows = run_methods(path_stem(path), inst, options);
                rows.insert(rows.end(), instance_rows.begin(), instance_rows.end());
            }
        } catch (const std::exception& e) {
            emit_error(path_stem(path), e.what());
        }
    }

    // Average rows per (n, method), over the instances that produced values.
    std::map<std::pair<int, std::string>, std::vector<const BenchRow*>> groups;
    std::vector<std::pair<int, std::string>> group_order;
    for (const BenchRow& row : rows) {
        if (!row.error.empty())
            continue;
        const auto key = std::make_pair(row.n, row.method);
        if (groups.find(key) == groups.end())
            group_order.push_back(key);
        groups[key].push_back(&row);
    }
    std::stable_sort(group_order.begin(), group_order.end(),
                     [&](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<BenchRow> averages;
    for (const auto& key : group_order) {
        const auto& members = groups[key];
        BenchRow avg;
        avg.label = "avg";
        avg.n = key.first;
        avg.method = key.second;
        auto mean_gap = [&](auto field, bool star_field) -> std::optional<double> {
            double sum = 0.0;
            int count = 0;
            bool star = false;
            for (const BenchRow* row : members)
                if (row->*field) {
                    sum += *(row->*field);
                    ++count;
                    star = star || (star_field ? row->ugap_star : row->lgap_star);
                }
            if (count == 0)
                return std::nullopt;
            if (star_field)
                avg.ugap_star = star;
            else
                avg.lgap_star = star;
            return sum / count;
        };
        avg.lgap = mean_gap(&BenchRow::lgap, false);
        avg.ugap = mean_gap(&BenchRow::ugap, true);
        auto mean_int = [&](auto field) -> std::optional<std::int64_t> {
            std::int64_t sum = 0;
            int count = 0;
            for (const BenchRow* row : members)
                if (row->*field) {
                    sum += *(row->*field);
                    ++count;
                }
            if (count == 0)
                return std::nullopt;
            return sum / count;
        };
        avg.nodes = mean_int(&BenchRow::nodes);
        avg.ms = mean_int(&BenchRow::ms);
        averages.push_back(std::move(avg));
    }
    rows.insert(rows.end(), averages.begin(), averages.end());
    return rows;
}

namespace {

std::string gap_cell(const std::optional<double>& gap, bool star) {
    if (!gap)
        return "";
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (*gap * 100.0) << "%";
    if (star)
        os << "*";
    return os.str();
}

template <typename T>
std::string int_cell(const std::optional<T>& value) {
    return value ? std::to_string(*value) : "";
}

} // namespace

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "label,n,method,lb,ub,lgap,ugap,nodes,ms\n";
    for (const BenchRow& row : rows) {
        os << row.label << "," << row.n << "," << row.method << ","
           << int_cell(row.lb) << "," << int_cell(row.ub) << ","
           << gap_cell(row.lgap, row.lgap_star) << ","
           << gap_cell(row.ugap, row.ugap_star) << ","
           << int_cell(row.nodes) << "," << int_cell(row.ms) << "\n";
    }
    return os.str();
}

} // namespace ucddp
