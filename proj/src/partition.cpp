#include "ucddp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ucddp {

Partition decode(const std::vector<std::uint8_t>& delta) {
    for (std::uint8_t v : delta)
        if (v > 1)
            throw std::invalid_argument("delta entries must be 0 or 1");
    return Partition{delta};
}

RatioOrders ratio_orders(const Instance& inst) {
    const int n = inst.n();
    RatioOrders orders;
    orders.rho.resize(static_cast<std::size_t>(n));
    orders.sigma.resize(static_cast<std::size_t>(n));
    std::iota(orders.rho.begin(), orders.rho.end(), 0);
    std::iota(orders.sigma.begin(), orders.sigma.end(), 0);
    std::sort(orders.rho.begin(), orders.rho.end(), [&](int i, int j) {
        if (alpha_ratio_greater(inst, i, j))
            return true;
        if (alpha_ratio_greater(inst, j, i))
            return false;
        return i < j;
    });
    std::sort(orders.sigma.begin(), orders.sigma.end(), [&](int i, int j) {
        if (beta_ratio_greater(inst, i, j))
            return true;
        if (beta_ratio_greater(inst, j, i))
            return false;
        return i < j;
    });
    orders.rho_inv.resize(static_cast<std::size_t>(n));
    orders.sigma_inv.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        orders.rho_inv[static_cast<std::size_t>(orders.rho[static_cast<std::size_t>(k)])] = k;
        orders.sigma_inv[static_cast<std::size_t>(orders.sigma[static_cast<std::size_t>(k)])] = k;
    }
    return orders;
}

namespace {

void check_partition(const Instance& inst, const Partition& part) {
    if (static_cast<int>(part.delta.size()) != inst.n())
        throw std::invalid_argument("partition size does not match instance");
    for (std::uint8_t v : part.delta)
        if (v > 1)
            throw std::invalid_argument("delta entries must be 0 or 1");
}

} // namespace

CanonicalSchedule build_canonical_schedule(const Instance& inst, const Partition& part) {
    check_partition(inst, part);
    const int n = inst.n();
    const RatioOrders orders = ratio_orders(inst);

    CanonicalSchedule sched;
    // Early side processed in decreasing rho position, so the highest
    // alpha-ratio early task completes exactly at d.
    for (int k = n - 1; k >= 0; --k) {
        const int j = orders.rho[static_cast<std::size_t>(k)];
        if (part.delta[static_cast<std::size_t>(j)] == 1)
            sched.early_order.push_back(j);
    }
    for (int k = 0; k < n; ++k) {
        const int j = orders.sigma[static_cast<std::size_t>(k)];
        if (part.delta[static_cast<std::size_t>(j)] == 0)
            sched.tardy_order.push_back(j);
    }

    sched.completion.assign(static_cast<std::size_t>(n), 0);
    sched.earliness.assign(static_cast<std::size_t>(n), 0);
    sched.tardiness.assign(static_cast<std::size_t>(n), 0);

    const std::int64_t d = inst.due_date();
    std::int64_t early_total = 0;
    for (int j : sched.early_order)
        early_total += inst.p(j);
    std::int64_t t = d - early_total;
    for (int j : sched.early_order) {
        t += inst.p(j);
        sched.completion[static_cast<std::size_t>(j)] = t;
        sched.earliness[static_cast<std::size_t>(j)] = d - t;
    }
    t = d;
    for (int j : sched.tardy_order) {
        t += inst.p(j);
        sched.completion[static_cast<std::size_t>(j)] = t;
        sched.tardiness[static_cast<std::size_t>(j)] = t - d;
    }
    return sched;
}

std::int64_t evaluate_partition(const Instance& inst, const Partition& part) {
    const CanonicalSchedule sched = build_canonical_schedule(inst, part);
    std::int64_t total = 0;
    for (int j = 0; j < inst.n(); ++j)
        total += inst.alpha(j) * sched.earliness[static_cast<std::size_t>(j)] +
                 inst.beta(j) * sched.tardiness[static_cast<std::size_t>(j)];
    return total;
}

std::int64_t schedule_penalty(const Instance& inst,
                              const std::vector<std::int64_t>& completion) {
    const int n = inst.n();
    if (static_cast<int>(completion.size()) != n)
        throw std::invalid_argument("completion vector size does not match instance");
    std::vector<int> by_start(static_cast<std::size_t>(n));
    std::iota(by_start.begin(), by_start.end(), 0);
    std::sort(by_start.begin(), by_start.end(), [&](int i, int j) {
        return completion[static_cast<std::size_t>(i)] - inst.p(i) <
               completion[static_cast<std::size_t>(j)] - inst.p(j);
    });
    std::int64_t prev_end = 0;
    for (int j : by_start) {
        const std::int64_t start = completion[static_cast<std::size_t>(j)] - inst.p(j);
        if (completion[static_cast<std::size_t>(j)] <= 0 || start < 0)
            throw std::invalid_argument("completion times must give non-negative starts");
        if (start < prev_end)
            throw std::invalid_argument("tasks overlap");
        prev_end = completion[static_cast<std::size_t>(j)];
    }
    const std::int64_t d = inst.due_date();
    std::int64_t total = 0;
    for (int j = 0; j < n; ++j) {
        const std::int64_t c = completion[static_cast<std::size_t>(j)];
        const std::int64_t early = d - c > 0 ? d - c : 0;
        const std::int64_t tardy = c - d > 0 ? c - d : 0;
        total += inst.alpha(j) * early + inst.beta(j) * tardy;
    }
    return total;
}

std::size_t Encoding::pair_index(int i, int j, int n) {
    // Row-major over pairs i < j.
    const auto ii = static_cast<std::size_t>(i);
    const auto jj = static_cast<std::size_t>(j);
    const auto nn = static_cast<std::size_t>(n);
    return ii * nn - ii * (ii + 1) / 2 + (jj - ii - 1);
}

std::uint8_t Encoding::x_at(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    return x[pair_index(i, j, static_cast<int>(delta.size()))];
}

Encoding encode(const Partition& part) {
    const int n = static_cast<int>(part.delta.size());
    Encoding enc;
    enc.delta = part.delta;
    enc.x.resize(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            enc.x[Encoding::pair_index(i, j, n)] =
                part.delta[static_cast<std::size_t>(i)] != part.delta[static_cast<std::size_t>(j)] ? 1 : 0;
    return enc;
}

std::int64_t g_value(const Instance& inst, const Encoding& enc) {
    const int n = inst.n();
    if (static_cast<int>(enc.delta.size()) != n)
        throw std::invalid_argument("encoding size does not match instance");
    if (enc.x.size() != static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2)
        throw std::invalid_argument("pair variable vector has wrong size");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::uint8_t want =
                enc.delta[static_cast<std::size_t>(i)] != enc.delta[static_cast<std::size_t>(j)] ? 1 : 0;
            if (enc.x_at(i, j) != want)
                throw std::invalid_argument("X is not consistent with delta");
        }

    const RatioOrders orders = ratio_orders(inst);
    std::int64_t total = 0;
    for (int j = 0; j < n; ++j) {
        const std::int64_t dj = enc.delta[static_cast<std::size_t>(j)];
        for (int k = 0; k < orders.rho_inv[static_cast<std::size_t>(j)]; ++k) {
            const int i = orders.rho[static_cast<std::size_t>(k)];
            const std::int64_t num =
                dj + enc.delta[static_cast<std::size_t>(i)] - enc.x_at(i, j);
            if (num % 2 != 0)
                throw std::logic_error("half-term numerator is odd");
            total += inst.alpha(j) * inst.p(i) * (num / 2);
        }
        for (int k = 0; k < orders.sigma_inv[static_cast<std::size_t>(j)]; ++k) {
            const int i = orders.sigma[static_cast<std::size_t>(k)];
            const std::int64_t num =
                2 - (dj + enc.delta[static_cast<std::size_t>(i)]) - enc.x_at(i, j);
            if (num % 2 != 0)
                throw std::logic_error("half-term numerator is odd");
            total += inst.beta(j) * inst.p(i) * (num / 2);
        }
        total += inst.beta(j) * inst.p(j) * (1 - dj);
    }
    return total;
}

nlohmann::ordered_json solution_json(const Instance& inst, const Partition& part) {
    const CanonicalSchedule sched = build_canonical_schedule(inst, part);
    std::int64_t penalty = 0;
    for (int j = 0; j < inst.n(); ++j)
        penalty += inst.alpha(j) * sched.earliness[static_cast<std::size_t>(j)] +
                   inst.beta(j) * sched.tardiness[static_cast<std::size_t>(j)];

    nlohmann::ordered_json out;
    out["delta"] = nlohmann::ordered_json::array();
    for (std::uint8_t v : part.delta)
        out["delta"].push_back(static_cast<int>(v));
    out["penalty"] = penalty;
    out["early"] = nlohmann::ordered_json::array();
    for (int j : sched.early_order)
        out["early"].push_back(j + 1);
    out["tardy"] = nlohmann::ordered_json::array();
    for (int j : sched.tardy_order)
        out["tardy"].push_back(j + 1);
    out["completion"] = sched.completion;
    return out;
}

} // namespace ucddp
