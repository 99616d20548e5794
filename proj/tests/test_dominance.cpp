#include "doctest.h"

#include <random>
#include <vector>

#include "oracle.hpp"
#include "ucddp/dominance.hpp"
#include "ucddp/partition.hpp"

using namespace ucddp;
using ucddp::testing::delta_from_mask;
using ucddp::testing::make_two_task_instance;

TEST_CASE("neighbor sets on the two-task instance") {
    const Instance i2 = make_two_task_instance();
    const NeighborSets s0 = neighbor_sets(i2, 0);
    CHECK(s0.a.empty());
    CHECK(s0.a_bar == std::vector<int>{1});
    CHECK(s0.b.empty());
    CHECK(s0.b_bar == std::vector<int>{1});
    const NeighborSets s1 = neighbor_sets(i2, 1);
    CHECK(s1.a == std::vector<int>{0});
    CHECK(s1.a_bar.empty());
    CHECK(s1.b == std::vector<int>{0});
    CHECK(s1.b_bar.empty());

    const Instance one({3}, {2}, {7});
    const NeighborSets lone = neighbor_sets(one, 0);
    CHECK(lone.a.empty());
    CHECK(lone.a_bar.empty());
    CHECK(lone.b.empty());
    CHECK(lone.b_bar.empty());
}

TEST_CASE("insert variation values") {
    const Instance i2 = make_two_task_instance();
    CHECK(delta_insert(i2, std::vector<std::uint8_t>{1, 1}, 0) == 1);
    CHECK(delta_insert(i2, std::vector<std::uint8_t>{0, 0}, 0) == 3);
    CHECK(delta_insert(i2, std::vector<double>{1.0, 0.5}, 0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(delta_insert(i2, std::vector<double>{1.0, 1.5}, 0),
                    std::invalid_argument);
    // f({2},{1}) - f({1,2},{}) = 2 - 1.
    CHECK(evaluate_partition(i2, Partition{{0, 1}}) -
              evaluate_partition(i2, Partition{{1, 1}}) ==
          delta_insert(i2, std::vector<std::uint8_t>{1, 1}, 0));
}

TEST_CASE("swap variation values") {
    const Instance i2 = make_two_task_instance();
    CHECK(delta_swap(i2, std::vector<std::uint8_t>{1, 0}, 0, 1) == 0);
    CHECK(delta_swap(i2, std::vector<std::uint8_t>{0, 1}, 1, 0) == 0);
    CHECK_THROWS_AS(delta_swap(i2, std::vector<std::uint8_t>{1, 0}, 0, 0),
                    std::invalid_argument);
    const Instance one({3}, {2}, {7});
    CHECK_THROWS_AS(delta_swap(one, std::vector<std::uint8_t>{1}, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("big-M constants on the two-task instance") {
    const Instance i2 = make_two_task_instance();
    const BigMInsert m0 = big_m_insert(i2, 0);
    CHECK(m0.m == -1); // may be negative
    CHECK(m0.m_prime == 3);
    const BigMSwap s01 = big_m_swap(i2, 0, 1);
    CHECK(s01.m_tilde == 1);
    CHECK(s01.m_times2 == 2);

    const Instance one({3}, {2}, {7});
    const BigMInsert lone = big_m_insert(one, 0);
    CHECK(lone.m == -one.beta(0) * one.p(0));
    CHECK(lone.m_prime == one.beta(0) * one.p(0));
}

TEST_CASE("check_dominance on the two-task instance") {
    const Instance i2 = make_two_task_instance();
    CHECK(check_dominance(i2, {1, 1}).empty());

    const auto report = check_dominance(i2, {0, 0});
    REQUIRE(report.size() == 2);
    CHECK(report[0].kind == ViolationKind::insert_tardy);
    CHECK(report[0].u == 0);
    CHECK(report[0].magnitude == 3);
    CHECK(report[1].kind == ViolationKind::insert_tardy);
    CHECK(report[1].u == 1);

    const Instance one({3}, {2}, {7});
    CHECK(check_dominance(one, {1}).empty());
}

TEST_CASE("violation report serializes to the documented JSON") {
    const Instance i2 = make_two_task_instance();
    const std::string text = violations_json(check_dominance(i2, {0, 0})).dump();
    CHECK(text ==
          R"([{"kind":"insert_tardy","u":1,"v":null,"violation":3},)"
          R"({"kind":"insert_tardy","u":2,"v":null,"violation":3}])");
}

TEST_CASE("insert and swap identities hold exhaustively") {
    for (std::uint64_t seed : {41u, 42u, 43u}) {
        const int n = 3 + static_cast<int>(seed % 5);
        const Instance inst = generate_random(n, seed, {1, 12}, {1, 9}, {1, 9});
        const DominanceContext ctx(inst);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto delta = delta_from_mask(mask, n);
            const std::int64_t f = evaluate_partition(inst, Partition{delta});
            for (int u = 0; u < n; ++u) {
                auto flipped = delta;
                flipped[static_cast<std::size_t>(u)] ^= 1;
                const std::int64_t diff =
                    evaluate_partition(inst, Partition{flipped}) - f;
                if (delta[static_cast<std::size_t>(u)])
                    CHECK(diff == ctx.delta_insert(delta, u));
                else
                    CHECK(diff == -ctx.delta_insert(delta, u));
                for (int v = 0; v < n; ++v) {
                    if (v == u || !delta[static_cast<std::size_t>(u)] ||
                        delta[static_cast<std::size_t>(v)])
                        continue;
                    auto swapped = delta;
                    swapped[static_cast<std::size_t>(u)] = 0;
                    swapped[static_cast<std::size_t>(v)] = 1;
                    CHECK(evaluate_partition(inst, Partition{swapped}) - f ==
                          ctx.delta_swap(delta, u, v));
                }
            }
        }
    }
}

TEST_CASE("big-M bounds hold for every binary point") {
    for (std::uint64_t seed : {51u, 52u}) {
        const int n = 4 + static_cast<int>(seed % 4);
        const Instance inst = generate_random(n, seed, {1, 12}, {1, 9}, {1, 9});
        const DominanceContext ctx(inst);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto delta = delta_from_mask(mask, n);
            for (int u = 0; u < n; ++u) {
                const BigMInsert m = ctx.big_m_insert(u);
                const std::int64_t du = ctx.delta_insert(delta, u);
                CHECK(du >= -m.m);
                CHECK(-du >= -m.m_prime);
                for (int v = 0; v < n; ++v) {
                    if (v == u)
                        continue;
                    const BigMSwap ms = ctx.big_m_swap(u, v);
                    const std::int64_t duv = ctx.delta_swap(delta, u, v);
                    CHECK(duv >= -ms.m_tilde);
                    // -m_tilde >= -2M and -m_tilde >= -M.
                    CHECK(-2 * ms.m_tilde >= -2 * ms.m_times2);
                    CHECK(-2 * ms.m_tilde >= -ms.m_times2);
                }
            }
        }
    }
}

TEST_CASE("big-M bounds hold on sampled points at n = 16") {
    const Instance inst = generate_random(16, 161, {1, 20}, {1, 10}, {1, 10});
    const DominanceContext ctx(inst);
    std::mt19937_64 rng(161);
    for (int sample = 0; sample < 200; ++sample) {
        std::vector<std::uint8_t> delta(16);
        for (auto& bit : delta)
            bit = static_cast<std::uint8_t>(rng() & 1u);
        for (int u = 0; u < 16; ++u) {
            const BigMInsert m = ctx.big_m_insert(u);
            const std::int64_t du = ctx.delta_insert(delta, u);
            CHECK(du >= -m.m);
            CHECK(-du >= -m.m_prime);
            const int v = static_cast<int>(rng() % 16);
            if (v == u)
                continue;
            CHECK(ctx.delta_swap(delta, u, v) >= -ctx.big_m_swap(u, v).m_tilde);
        }
    }
}

TEST_CASE("reported violations are exactly the improving operations") {
    for (std::uint64_t seed : {61u, 62u}) {
        const int n = 4 + static_cast<int>(seed % 3);
        const Instance inst = generate_random(n, seed, {1, 12}, {1, 9}, {1, 9});
        const DominanceContext ctx(inst);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto delta = delta_from_mask(mask, n);
            const std::int64_t f = evaluate_partition(inst, Partition{delta});
            const auto report = ctx.check(delta);
            std::size_t expected = 0;
            for (int u = 0; u < n; ++u) {
                auto flipped = delta;
                flipped[static_cast<std::size_t>(u)] ^= 1;
                const std::int64_t moved = evaluate_partition(inst, Partition{flipped});
                if (delta[static_cast<std::size_t>(u)] && moved < f)
                    ++expected;
                if (!delta[static_cast<std::size_t>(u)] && moved < f)
                    ++expected;
                for (int v = 0; v < n; ++v) {
                    if (v == u || !delta[static_cast<std::size_t>(u)] ||
                        delta[static_cast<std::size_t>(v)])
                        continue;
                    auto swapped = delta;
                    swapped[static_cast<std::size_t>(u)] = 0;
                    swapped[static_cast<std::size_t>(v)] = 1;
                    if (evaluate_partition(inst, Partition{swapped}) < f)
                        ++expected;
                }
            }
            CHECK(report.size() == expected);
            for (const Violation& violation : report) {
                // The magnitude is the achievable penalty decrease.
                auto moved = delta;
                if (violation.kind == ViolationKind::swap) {
                    moved[static_cast<std::size_t>(violation.u)] = 0;
                    moved[static_cast<std::size_t>(violation.v)] = 1;
                } else {
                    moved[static_cast<std::size_t>(violation.u)] ^= 1;
                }
                CHECK(f - evaluate_partition(inst, Partition{moved}) ==
                      violation.magnitude);
            }
        }
    }
}

TEST_CASE("variations are affine in delta") {
    const Instance inst = generate_random(6, 77, {1, 10}, {1, 8}, {1, 8});
    const DominanceContext ctx(inst);
    const std::vector<double> lo(6, 0.0);
    std::vector<double> hi(6, 0.0);
    hi[1] = 1.0;
    hi[3] = 1.0;
    hi[4] = 1.0;
    std::vector<double> mid(6);
    for (int j = 0; j < 6; ++j)
        mid[static_cast<std::size_t>(j)] =
            (lo[static_cast<std::size_t>(j)] + hi[static_cast<std::size_t>(j)]) / 2.0;
    for (int u = 0; u < 6; ++u) {
        CHECK(ctx.delta_insert(mid, u) ==
              doctest::Approx((ctx.delta_insert(lo, u) + ctx.delta_insert(hi, u)) / 2.0));
        for (int v = 0; v < 6; ++v) {
            if (v == u)
                continue;
            CHECK(ctx.delta_swap(mid, u, v) ==
                  doctest::Approx((ctx.delta_swap(lo, u, v) + ctx.delta_swap(hi, u, v)) / 2.0));
        }
    }
}
