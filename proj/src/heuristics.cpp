#include "ucddp/heuristics.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ucddp/partition.hpp"

namespace ucddp {

std::vector<std::uint8_t> round_fractional(const Instance& inst,
                                           const std::vector<double>& delta_tilde) {
    if (static_cast<int>(delta_tilde.size()) != inst.n())
        throw std::invalid_argument("fractional vector size does not match instance");
    std::vector<std::uint8_t> delta(delta_tilde.size());
    for (std::size_t j = 0; j < delta_tilde.size(); ++j) {
        const double v = delta_tilde[j];
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("fractional entries must lie in [0,1]");
        const bool tardy = v < 0.5 ||
            (v == 0.5 && inst.alpha(static_cast<int>(j)) < inst.beta(static_cast<int>(j)));
        delta[j] = tardy ? 0 : 1;
    }
    return delta;
}

std::vector<std::uint8_t> half_round_start(const Instance& inst) {
    return round_fractional(inst, std::vector<double>(static_cast<std::size_t>(inst.n()), 0.5));
}

HeuristicResult local_search(const DominanceContext& ctx,
                             std::vector<std::uint8_t> delta,
                             std::string start_label) {
    const Instance& inst = ctx.instance();
    const int n = inst.n();
    if (static_cast<int>(delta.size()) != n)
        throw std::invalid_argument("delta size does not match instance");

    std::int64_t applied = 0;
    bool locally_opt = false;
    while (!locally_opt) {
        locally_opt = true;
        for (int u = 0; u < n; ++u) {
            if (delta[static_cast<std::size_t>(u)] == 1 && ctx.delta_insert(delta, u) < 0) {
                delta[static_cast<std::size_t>(u)] = 0;
                locally_opt = false;
                ++applied;
            }
            if (delta[static_cast<std::size_t>(u)] == 0 && ctx.delta_insert(delta, u) > 0) {
                delta[static_cast<std::size_t>(u)] = 1;
                locally_opt = false;
                ++applied;
            }
            for (int v = 0; v < n; ++v) {
                if (v == u)
                    continue;
                if (delta[static_cast<std::size_t>(u)] == 1 &&
                    delta[static_cast<std::size_t>(v)] == 0 &&
                    ctx.delta_swap(delta, u, v) < 0) {
                    delta[static_cast<std::size_t>(u)] = 0;
                    delta[static_cast<std::size_t>(v)] = 1;
                    locally_opt = false;
                    ++applied;
                }
            }
        }
    }

    HeuristicResult result;
    result.penalty = evaluate_partition(inst, Partition{delta});
    result.delta = std::move(delta);
    result.iterations = applied;
    result.start_label = std::move(start_label);
    return result;
}

HeuristicResult local_search(const Instance& inst,
                             std::vector<std::uint8_t> delta,
                             std::string start_label) {
    DominanceContext ctx(inst);
    return local_search(ctx, std::move(delta), std::move(start_label));
}

HeuristicResult multistart(const Instance& inst, int restarts, std::uint64_t seed) {
    if (restarts < 0)
        throw std::invalid_argument("restarts must be non-negative");
    DominanceContext ctx(inst);
    const int n = inst.n();

    HeuristicResult best =
        local_search(ctx, Partition::all_early(n).delta, "all-early");

    std::mt19937_64 rng(seed);
    for (int r = 1; r <= restarts; ++r) {
        std::vector<std::uint8_t> start(static_cast<std::size_t>(n));
        for (auto& bit : start)
            bit = static_cast<std::uint8_t>(rng() & 1u);
        HeuristicResult candidate =
            local_search(ctx, std::move(start), "random-" + std::to_string(r));
        if (candidate.penalty < best.penalty ||
            (candidate.penalty == best.penalty &&
             std::lexicographical_compare(candidate.delta.begin(), candidate.delta.end(),
                                          best.delta.begin(), best.delta.end())))
            best = std::move(candidate);
    }
    return best;
}

nlohmann::ordered_json heuristic_json(const HeuristicResult& result, std::int64_t wall_ms) {
    nlohmann::ordered_json out;
    out["delta"] = nlohmann::ordered_json::array();
    for (std::uint8_t v : result.delta)
        out["delta"].push_back(static_cast<int>(v));
    out["penalty"] = result.penalty;
    out["iterations"] = result.iterations;
    out["start_label"] = result.start_label;
    out["ms"] = wall_ms;
    return out;
}

} // namespace ucddp
