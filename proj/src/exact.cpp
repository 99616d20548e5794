#include "ucddp/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "ucddp/dominance.hpp"
#include "ucddp/heuristics.hpp"
#include "ucddp/partition.hpp"

namespace ucddp {

BruteForceResult brute_force(const Instance& inst) {
    const int n = inst.n();
    if (n > 24)
        throw std::invalid_argument("brute force is guarded to n <= 24, got n = " +
                                    std::to_string(n));

    // Gray-code walk: one task flips per step and the penalty moves by
    // exactly the insert variation of the flipped task.
    DominanceContext ctx(inst);
    std::vector<std::vector<std::int64_t>> coeff_by_flipped(static_cast<std::size_t>(n));
    std::vector<std::int64_t> variation(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) {
        coeff_by_flipped[static_cast<std::size_t>(w)].resize(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u)
            coeff_by_flipped[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] =
                ctx.insert_form(u).coeff[static_cast<std::size_t>(w)];
        variation[static_cast<std::size_t>(w)] = ctx.insert_form(w).constant;
    }

    std::vector<std::uint8_t> delta(static_cast<std::size_t>(n), 0);
    std::int64_t penalty = evaluate_partition(inst, Partition::all_tardy(n));

    BruteForceResult best{delta, penalty};
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int w = std::countr_zero(k);
        const bool was_early = delta[static_cast<std::size_t>(w)] == 1;
        penalty += was_early ? variation[static_cast<std::size_t>(w)]
                             : -variation[static_cast<std::size_t>(w)];
        delta[static_cast<std::size_t>(w)] = was_early ? 0 : 1;
        const std::int64_t sign = was_early ? -1 : 1;
        const auto& col = coeff_by_flipped[static_cast<std::size_t>(w)];
        for (int u = 0; u < n; ++u)
            variation[static_cast<std::size_t>(u)] += sign * col[static_cast<std::size_t>(u)];

        if (penalty < best.penalty ||
            (penalty == best.penalty &&
             std::lexicographical_compare(delta.begin(), delta.end(),
                                          best.delta.begin(), best.delta.end()))) {
            best.penalty = penalty;
            best.delta = delta;
        }
    }
    return best;
}

namespace {

// Interaction costs of task j against the currently fixed tasks, following
// the pairwise split of the penalty: an early pair (i, j) costs
// alpha_j * p_i when i precedes j in rho and alpha_i * p_j otherwise; a
// tardy pair costs the same with beta and sigma; a tardy task always pays
// beta_j * p_j on top.
class BoundState {
public:
    BoundState(const Instance& inst, const RatioOrders& orders)
        : inst_(inst), orders_(orders),
          status_(static_cast<std::size_t>(inst.n()), TaskStatus::free_task),
          early_cost_(static_cast<std::size_t>(inst.n()), 0),
          tardy_cost_(static_cast<std::size_t>(inst.n()), 0) {
        for (int j = 0; j < inst.n(); ++j)
            tardy_cost_[static_cast<std::size_t>(j)] = inst.beta(j) * inst.p(j);
        free_count_ = inst.n();
        // min(early, tardy) starts at 0 for every free task.
        sum_min_ = 0;
        fixed_cost_ = 0;
    }

    std::int64_t bound() const { return fixed_cost_ + sum_min_; }
    std::int64_t fixed_cost() const { return fixed_cost_; }
    int free_count() const { return free_count_; }
    TaskStatus status(int j) const { return status_[static_cast<std::size_t>(j)]; }
    std::int64_t early_cost(int j) const { return early_cost_[static_cast<std::size_t>(j)]; }
    std::int64_t tardy_cost(int j) const { return tardy_cost_[static_cast<std::size_t>(j)]; }

    void fix(int w, TaskStatus s) {
        sum_min_ -= min_cost(w);
        status_[static_cast<std::size_t>(w)] = s;
        --free_count_;
        if (s == TaskStatus::early_fixed) {
            fixed_cost_ += early_cost_[static_cast<std::size_t>(w)];
            adjust_early(w, +1);
        } else {
            fixed_cost_ += tardy_cost_[static_cast<std::size_t>(w)];
            adjust_tardy(w, +1);
        }
    }

    void unfix(int w) {
        const TaskStatus s = status_[static_cast<std::size_t>(w)];
        if (s == TaskStatus::early_fixed) {
            adjust_early(w, -1);
            fixed_cost_ -= early_cost_[static_cast<std::size_t>(w)];
        } else {
            adjust_tardy(w, -1);
            fixed_cost_ -= tardy_cost_[static_cast<std::size_t>(w)];
        }
        status_[static_cast<std::size_t>(w)] = TaskStatus::free_task;
        ++free_count_;
        sum_min_ += min_cost(w);
    }

private:
    std::int64_t min_cost(int j) const {
        return std::min(early_cost_[static_cast<std::size_t>(j)],
                        tardy_cost_[static_cast<std::size_t>(j)]);
    }

    void adjust_early(int w, int dir) {
        for (int j = 0; j < inst_.n(); ++j) {
            if (status_[static_cast<std::size_t>(j)] != TaskStatus::free_task)
                continue;
            const std::int64_t pair =
                orders_.rho_inv[static_cast<std::size_t>(w)] <
                        orders_.rho_inv[static_cast<std::size_t>(j)]
                    ? inst_.alpha(j) * inst_.p(w)
                    : inst_.alpha(w) * inst_.p(j);
            sum_min_ -= min_cost(j);
            early_cost_[static_cast<std::size_t>(j)] += dir * pair;
            sum_min_ += min_cost(j);
        }
    }

    void adjust_tardy(int w, int dir) {
        for (int j = 0; j < inst_.n(); ++j) {
            if (status_[static_cast<std::size_t>(j)] != TaskStatus::free_task)
                continue;
            const std::int64_t pair =
                orders_.sigma_inv[static_cast<std::size_t>(w)] <
                        orders_.sigma_inv[static_cast<std::size_t>(j)]
                    ? inst_.beta(j) * inst_.p(w)
                    : inst_.beta(w) * inst_.p(j);
            sum_min_ -= min_cost(j);
            tardy_cost_[static_cast<std::size_t>(j)] += dir * pair;
            sum_min_ += min_cost(j);
        }
    }

    const Instance& inst_;
    const RatioOrders& orders_;
    std::vector<TaskStatus> status_;
    std::vector<std::int64_t> early_cost_;
    std::vector<std::int64_t> tardy_cost_;
    std::int64_t fixed_cost_ = 0;
    std::int64_t sum_min_ = 0;
    int free_count_ = 0;
};

} // namespace

std::int64_t partial_lower_bound(const Instance& inst, const PartialAssignment& pa) {
    if (static_cast<int>(pa.status.size()) != inst.n())
        throw std::invalid_argument("assignment size does not match instance");
    const RatioOrders orders = ratio_orders(inst);
    BoundState state(inst, orders);
    for (int j = 0; j < inst.n(); ++j)
        if (pa.status[static_cast<std::size_t>(j)] != TaskStatus::free_task)
            state.fix(j, pa.status[static_cast<std::size_t>(j)]);
    return state.bound();
}

namespace {

class BnbSearch {
public:
    BnbSearch(const Instance& inst, const SolveLimits& limits)
        : inst_(inst), limits_(limits), orders_(ratio_orders(inst)),
          ctx_(inst), state_(inst, orders_),
          start_(std::chrono::steady_clock::now()) {
        refresh_interval_ = std::max(1, inst.n() / 4);
    }

    SolveResult run() {
        HeuristicResult incumbent = multistart(inst_, 4, 0);
        incumbent_delta_ = incumbent.delta;
        incumbent_penalty_ = incumbent.penalty;

        explore(0);

        SolveResult result;
        result.delta = incumbent_delta_;
        result.penalty = incumbent_penalty_;
        result.bound = stopped_ ? final_bound_ : incumbent_penalty_;
        result.gap = gap_of(result.bound);
        result.stats = stats_;
        result.stats.proven_optimal = result.bound == result.penalty;
        result.stats.wall_ms = elapsed_ms();
        return result;
    }

private:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

    double gap_of(std::int64_t bound) const {
        if (incumbent_penalty_ == 0)
            return 0.0;
        return static_cast<double>(incumbent_penalty_ - bound) /
               static_cast<double>(incumbent_penalty_);
    }

    std::int64_t certified_bound() const {
        std::int64_t b = std::min(incumbent_penalty_, state_.bound());
        if (!open_bounds_.empty())
            b = std::min(b, *open_bounds_.begin());
        return b;
    }

    bool should_stop() {
        const std::int64_t lb = certified_bound();
        if (gap_of(lb) <= limits_.gap_limit) {
            stopped_ = true;
            final_bound_ = lb;
            return true;
        }
        if (limits_.time_limit_ms > 0 && elapsed_ms() >= limits_.time_limit_ms) {
            stopped_ = true;
            final_bound_ = lb;
            return true;
        }
        return false;
    }

    void offer_incumbent(const std::vector<std::uint8_t>& delta, std::int64_t penalty) {
        if (penalty < incumbent_penalty_) {
            incumbent_penalty_ = penalty;
            incumbent_delta_ = delta;
            ++stats_.incumbent_updates;
        }
    }

    void refresh_incumbent() {
        std::vector<std::uint8_t> delta(static_cast<std::size_t>(inst_.n()));
        for (int j = 0; j < inst_.n(); ++j) {
            switch (state_.status(j)) {
            case TaskStatus::early_fixed: delta[static_cast<std::size_t>(j)] = 1; break;
            case TaskStatus::tardy_fixed: delta[static_cast<std::size_t>(j)] = 0; break;
            case TaskStatus::free_task:
                delta[static_cast<std::size_t>(j)] =
                    state_.early_cost(j) <= state_.tardy_cost(j) ? 1 : 0;
                break;
            }
        }
        HeuristicResult res = local_search(ctx_, std::move(delta), "refresh");
        offer_incumbent(res.delta, res.penalty);
    }

    void explore(int depth) {
        if (stopped_ || should_stop())
            return;
        if (state_.free_count() == 0) {
            // Bound is the exact penalty of the full assignment.
            std::vector<std::uint8_t> delta(static_cast<std::size_t>(inst_.n()));
            for (int j = 0; j < inst_.n(); ++j)
                delta[static_cast<std::size_t>(j)] =
                    state_.status(j) == TaskStatus::early_fixed ? 1 : 0;
            offer_incumbent(delta, state_.fixed_cost());
            return;
        }
        if (depth > 0 && depth % refresh_interval_ == 0)
            refresh_incumbent();

        // Branch on the free task with the largest early/tardy imbalance.
        int branch_task = -1;
        std::int64_t best_score = -1;
        for (int j = 0; j < inst_.n(); ++j) {
            if (state_.status(j) != TaskStatus::free_task)
                continue;
            const std::int64_t score =
                std::abs(state_.early_cost(j) - state_.tardy_cost(j));
            if (score > best_score) {
                best_score = score;
                branch_task = j;
            }
        }

        const bool early_first =
            state_.early_cost(branch_task) <= state_.tardy_cost(branch_task);
        const TaskStatus first = early_first ? TaskStatus::early_fixed : TaskStatus::tardy_fixed;
        const TaskStatus second = early_first ? TaskStatus::tardy_fixed : TaskStatus::early_fixed;

        state_.fix(branch_task, first);
        const std::int64_t bound_first = state_.bound();
        state_.unfix(branch_task);
        state_.fix(branch_task, second);
        const std::int64_t bound_second = state_.bound();
        state_.unfix(branch_task);

        auto dive = [&](TaskStatus side, std::int64_t bound) {
            if (stopped_ || bound >= incumbent_penalty_)
                return;
            state_.fix(branch_task, side);
            ++stats_.nodes;
            if (limits_.progress && limits_.progress_interval > 0 &&
                stats_.nodes % limits_.progress_interval == 0)
                limits_.progress(stats_.nodes, incumbent_penalty_);
            explore(depth + 1);
            state_.unfix(branch_task);
        };

        auto open_it = open_bounds_.insert(bound_second);
        dive(first, bound_first);
        open_bounds_.erase(open_it);
        if (stopped_)
            return;
        dive(second, bound_second);
    }

    const Instance& inst_;
    SolveLimits limits_;
    RatioOrders orders_;
    DominanceContext ctx_;
    BoundState state_;
    std::chrono::steady_clock::time_point start_;
    std::multiset<std::int64_t> open_bounds_;
    std::vector<std::uint8_t> incumbent_delta_;
    std::int64_t incumbent_penalty_ = 0;
    SolveStats stats_;
    bool stopped_ = false;
    std::int64_t final_bound_ = 0;
    int refresh_interval_ = 1;
};

} // namespace

SolveResult branch_and_bound(const Instance& inst, const SolveLimits& limits) {
    if (limits.time_limit_ms < 0)
        throw std::invalid_argument("time limit must be non-negative");
    if (limits.gap_limit < 0.0 || limits.gap_limit > 1.0)
        throw std::invalid_argument("gap limit must lie in [0,1]");
    BnbSearch search(inst, limits);
    return search.run();
}

nlohmann::ordered_json stats_json(const SolveResult& result) {
    nlohmann::ordered_json out;
    out["nodes"] = result.stats.nodes;
    out["optimal"] = result.stats.proven_optimal;
    out["penalty"] = result.penalty;
    out["bound"] = result.bound;
    out["gap"] = result.gap;
    out["ms"] = result.stats.wall_ms;
    return out;
}

} // namespace ucddp
