#pragma once

// Test-only reference implementations. These evaluate partitions by
// enumerating every processing order explicitly and never touch the
// library's ratio-order machinery, so they can arbitrate its results.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "ucddp/instance.hpp"

namespace ucddp::testing {

// Cheapest penalty of any schedule placing the early set as a block
// completing at d (in some order) and the tardy set as a block starting
// at d. Factorial in each side; keep n small.
inline std::int64_t oracle_partition_penalty(const Instance& inst,
                                             const std::vector<std::uint8_t>& delta) {
    std::vector<int> early, tardy;
    for (int j = 0; j < inst.n(); ++j)
        (delta[static_cast<std::size_t>(j)] ? early : tardy).push_back(j);

    const std::int64_t d = inst.due_date();

    auto best_early = [&]() {
        if (early.empty())
            return std::int64_t{0};
        std::vector<int> perm = early;
        std::sort(perm.begin(), perm.end());
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        do {
            std::int64_t total = 0;
            for (int j : perm)
                total += inst.p(j);
            std::int64_t t = d - total;
            std::int64_t pen = 0;
            for (int j : perm) {
                t += inst.p(j);
                pen += inst.alpha(j) * (d - t);
            }
            best = std::min(best, pen);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    auto best_tardy = [&]() {
        if (tardy.empty())
            return std::int64_t{0};
        std::vector<int> perm = tardy;
        std::sort(perm.begin(), perm.end());
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        do {
            std::int64_t t = d;
            std::int64_t pen = 0;
            for (int j : perm) {
                t += inst.p(j);
                pen += inst.beta(j) * (t - d);
            }
            best = std::min(best, pen);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    return best_early() + best_tardy();
}

struct OracleOptimum {
    std::vector<std::uint8_t> delta;
    std::int64_t penalty;
};

inline OracleOptimum oracle_global_minimum(const Instance& inst) {
    const int n = inst.n();
    OracleOptimum best;
    best.penalty = std::numeric_limits<std::int64_t>::max();
    std::vector<std::uint8_t> delta(static_cast<std::size_t>(n), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int j = 0; j < n; ++j)
            delta[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? 1 : 0;
        const std::int64_t pen = oracle_partition_penalty(inst, delta);
        if (pen < best.penalty ||
            (pen == best.penalty &&
             std::lexicographical_compare(delta.begin(), delta.end(),
                                          best.delta.begin(), best.delta.end())))
            best = {delta, pen};
    }
    return best;
}

inline Instance make_two_task_instance() {
    return Instance({1, 2}, {1, 1}, {2, 1});
}

inline std::vector<std::uint8_t> delta_from_mask(std::uint64_t mask, int n) {
    std::vector<std::uint8_t> delta(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        delta[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? 1 : 0;
    return delta;
}

} // namespace ucddp::testing
