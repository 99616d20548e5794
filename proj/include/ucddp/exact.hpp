#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "json.hpp"
#include "ucddp/instance.hpp"

namespace ucddp {

struct BruteForceResult {
    std::vector<std::uint8_t> delta;
    std::int64_t penalty = 0;
};

/// Exact minimum of f over all 2^n partitions; ties resolved to the
/// lexicographically smallest delta. Guarded to n <= 24.
BruteForceResult brute_force(const Instance& inst);

enum class TaskStatus : std::uint8_t { free_task, early_fixed, tardy_fixed };

struct PartialAssignment {
    std::vector<TaskStatus> status;

    static PartialAssignment all_free(int n) {
        return PartialAssignment{
            std::vector<TaskStatus>(static_cast<std::size_t>(n), TaskStatus::free_task)};
    }
};

/// Admissible lower bound on f over all completions of a partial
/// assignment: the exact cost of fixed-fixed interactions plus, for each
/// free task, the cheaper of its early/tardy interaction cost against the
/// fixed tasks. All dropped free-free terms are non-negative, so the bound
/// never overestimates, and it is exact once everything is fixed.
std::int64_t partial_lower_bound(const Instance& inst, const PartialAssignment& pa);

struct SolveStats {
    std::int64_t nodes = 0; // root excluded
    std::int64_t incumbent_updates = 0;
    std::int64_t wall_ms = 0;
    bool proven_optimal = false;
};

struct SolveResult {
    std::vector<std::uint8_t> delta;
    std::int64_t penalty = 0;
    std::int64_t bound = 0;  // certified global lower bound
    double gap = 0.0;        // (penalty - bound) / penalty
    SolveStats stats;
};

struct SolveLimits {
    std::int64_t time_limit_ms = 0; // 0 = unlimited
    double gap_limit = 0.0;         // stop once (incumbent - bound)/incumbent <= gap_limit

    // Called every progress_interval explored nodes with (nodes, incumbent).
    std::function<void(std::int64_t, std::int64_t)> progress;
    std::int64_t progress_interval = 65536;
};

/// Depth-first branch-and-bound over the early/tardy choice, cheaper side
/// first, with a multistart incumbent and periodic local-search refreshes.
/// Deterministic for fixed inputs and limits.
SolveResult branch_and_bound(const Instance& inst, const SolveLimits& limits = {});

/// {"nodes":..,"optimal":..,"penalty":..,"bound":..,"gap":..,"ms":..}
nlohmann::ordered_json stats_json(const SolveResult& result);

} // namespace ucddp
