#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "ucddp/dominance.hpp"
#include "ucddp/instance.hpp"

namespace ucddp {

struct HeuristicResult {
    std::vector<std::uint8_t> delta;
    std::int64_t penalty = 0;
    std::int64_t iterations = 0; // applied insert/swap operations
    std::string start_label;
};

/// delta_j = 0 if tilde_j < 1/2, or tilde_j = 1/2 with alpha_j < beta_j;
/// 1 otherwise.
std::vector<std::uint8_t> round_fractional(const Instance& inst,
                                           const std::vector<double>& delta_tilde);

/// The all-0.5 fractional point put through round_fractional.
std::vector<std::uint8_t> half_round_start(const Instance& inst);

/// Improvement procedure by insert and swap operations. Scans tasks in
/// ascending index, applies the first improving insert or swap found,
/// and re-passes until a full pass applies nothing. Every applied
/// operation strictly decreases the penalty, so the procedure terminates
/// on an insert and swap local optimum.
HeuristicResult local_search(const DominanceContext& ctx,
                             std::vector<std::uint8_t> delta,
                             std::string start_label = "input");
HeuristicResult local_search(const Instance& inst,
                             std::vector<std::uint8_t> delta,
                             std::string start_label = "input");

/// Runs local_search from the all-early vector and from `restarts` seeded
/// uniform random binary vectors; returns the best result, breaking
/// penalty ties by lexicographically smallest delta. Deterministic for
/// fixed arguments.
HeuristicResult multistart(const Instance& inst, int restarts, std::uint64_t seed);

nlohmann::ordered_json heuristic_json(const HeuristicResult& result, std::int64_t wall_ms);

} // namespace ucddp
