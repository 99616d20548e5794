#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "ucddp/instance.hpp"

namespace ucddp {

/// An ordered bi-partition (E, T) of the task set, as a 0/1 early
/// indicator vector. E may be empty.
struct Partition {
    std::vector<std::uint8_t> delta; // 1 = early, 0 = tardy

    static Partition all_early(int n) {
        return Partition{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1)};
    }
    static Partition all_tardy(int n) {
        return Partition{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
    }
    bool operator==(const Partition&) const = default;
};

Partition decode(const std::vector<std::uint8_t>& delta);

/// The two task orders driving the canonical schedule: rho sorts by
/// non-increasing alpha-ratio, sigma by non-increasing beta-ratio, ties
/// broken by ascending task index. rho_inv/sigma_inv map task -> position.
struct RatioOrders {
    std::vector<int> rho;
    std::vector<int> sigma;
    std::vector<int> rho_inv;
    std::vector<int> sigma_inv;
};

RatioOrders ratio_orders(const Instance& inst);

/// The unique rho-sigma-shaped schedule of a partition: early tasks packed
/// against d from the left (last one on time), tardy tasks packed from d
/// to the right, no idle time on either side.
struct CanonicalSchedule {
    std::vector<int> early_order; // processing order
    std::vector<int> tardy_order; // processing order
    std::vector<std::int64_t> completion;
    std::vector<std::int64_t> earliness;
    std::vector<std::int64_t> tardiness;
};

CanonicalSchedule build_canonical_schedule(const Instance& inst, const Partition& part);

/// Penalty f(E,T) of a partition, evaluated on its canonical schedule.
/// f(empty, J) is the penalty of the tardy block starting at d.
std::int64_t evaluate_partition(const Instance& inst, const Partition& part);

/// The literal objective over explicit completion times. Validates that
/// completions are realizable (non-negative starts, no overlap).
std::int64_t schedule_penalty(const Instance& inst,
                              const std::vector<std::int64_t>& completion);

/// A partition together with the pair variables X_{i,j} = [delta_i != delta_j]
/// over unordered pairs i < j.
struct Encoding {
    std::vector<std::uint8_t> delta;
    std::vector<std::uint8_t> x; // indexed by pair_index

    static std::size_t pair_index(int i, int j, int n);
    std::uint8_t x_at(int i, int j) const;

    bool operator==(const Encoding&) const = default;
};

Encoding encode(const Partition& part);

/// Algebraic penalty g(delta, X) over an encoding; equals
/// evaluate_partition(decode(delta)) for consistent encodings.
/// Throws if X is not Fortet-consistent with delta.
std::int64_t g_value(const Instance& inst, const Encoding& enc);

/// {"delta":[...],"penalty":N,"early":[...],"tardy":[...],"completion":[...]}
/// with 1-based task ids and fixed field order.
nlohmann::ordered_json solution_json(const Instance& inst, const Partition& part);

} // namespace ucddp
