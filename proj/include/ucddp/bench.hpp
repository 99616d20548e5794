#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucddp/instance.hpp"

namespace ucddp {

/// One benchmark result line. Gaps are fractions; a starred gap was
/// computed against the best upper bound instead of a proven optimum.
struct BenchRow {
    std::string label;
    int n = 0;
    std::string method;
    std::optional<std::int64_t> lb;
    std::optional<std::int64_t> ub;
    std::optional<double> lgap;
    std::optional<double> ugap;
    bool lgap_star = false;
    bool ugap_star = false;
    std::optional<std::int64_t> nodes;
    std::optional<std::int64_t> ms;
    std::string error; // empty unless the row could not be produced
};

struct BenchOptions {
    std::vector<std::string> methods; // subset of {brute, bnb, heur, half-round+ls}
    std::int64_t time_limit_ms = 0;
    double gap_limit = 0.0;
    std::uint64_t seed = 0;
    int restarts = 4;
    int orlib_n = 0; // when > 0, input files are OR-Library files of n tasks
};

/// Runs every requested method on every instance file, one row per
/// (instance, method), followed by per-(n, method) average rows over the
/// instances that produced values. Missing or unreadable files yield a
/// row with an error note; the run continues.
std::vector<BenchRow> bench_report(const std::vector<std::string>& instance_paths,
                                   const BenchOptions& options);

/// Fixed column order: label,n,method,lb,ub,lgap,ugap,nodes,ms.
/// Gaps print as percentages with two decimals, starred when computed
/// against an upper bound.
std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace ucddp
