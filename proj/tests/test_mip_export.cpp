#include "doctest.h"

#include <string>
#include <vector>

#include "oracle.hpp"
#include "ucddp/dominance.hpp"
#include "ucddp/exact.hpp"
#include "ucddp/mip_export.hpp"
#include "ucddp/partition.hpp"

using namespace ucddp;
using ucddp::testing::delta_from_mask;
using ucddp::testing::make_two_task_instance;

TEST_CASE("variant sizes on the two-task instance") {
    const Instance i2 = make_two_task_instance();
    const MipModel f2 = build_model(i2, FormulationVariant::f2);
    CHECK(f2.var_count() == 3); // d_1, d_2, x_1_2
    CHECK(f2.inequalities.size() == 4);

    CHECK(build_model(i2, FormulationVariant::fi).inequalities.size() == 8);
    CHECK(build_model(i2, FormulationVariant::fs).inequalities.size() == 6);
    CHECK(build_model(i2, FormulationVariant::fis).inequalities.size() == 10);
}

TEST_CASE("variant counts follow the size formulas") {
    const Instance inst = generate_random(5, 3, {1, 10}, {1, 8}, {1, 8});
    const std::size_t n = 5;
    CHECK(build_model(inst, FormulationVariant::f2).inequalities.size() ==
          2 * n * (n - 1));
    CHECK(build_model(inst, FormulationVariant::fi).inequalities.size() ==
          2 * n * (n - 1) + 2 * n);
    CHECK(build_model(inst, FormulationVariant::fs).inequalities.size() ==
          2 * n * (n - 1) + n * (n - 1));
    CHECK(build_model(inst, FormulationVariant::fis).inequalities.size() ==
          2 * n * (n - 1) + 2 * n + n * (n - 1));
}

TEST_CASE("emitted text contains the expected pair and insert lines") {
    const Instance i2 = make_two_task_instance();
    const std::string f2 = emit_lp(build_model(i2, FormulationVariant::f2));
    CHECK(f2.find("x_1_2 - d_1 + d_2 >= 0") != std::string::npos);
    CHECK(f2.find("x_1_2 + d_1 + d_2 <= 2") != std::string::npos);

    // Delta_1(d) >= -M_1 (1 - d_1) with M_1 = -1 expands to d_1 - 2 d_2 >= -2.
    const std::string fi = emit_lp(build_model(i2, FormulationVariant::fi));
    CHECK(fi.find("insert_early_1: d_1 - 2 d_2 >= -2") != std::string::npos);
}

TEST_CASE("emission is deterministic and round-trips through the reader") {
    for (auto variant : {FormulationVariant::f2, FormulationVariant::fi,
                         FormulationVariant::fs, FormulationVariant::fis}) {
        const Instance inst = generate_random(6, 17, {1, 12}, {1, 9}, {1, 9});
        const MipModel model = build_model(inst, variant);
        const std::string text = emit_lp(model);
        CHECK(text == emit_lp(build_model(inst, variant)));
        const MipModel back = parse_lp(text);
        CHECK(back == model);
        CHECK(emit_lp(back) == text);
    }
}

TEST_CASE("half-integral swap coefficients emit as .5 decimals") {
    // Scan for a pair with negative odd m_tilde, whose M becomes k.5.
    bool found = false;
    for (std::uint64_t seed = 0; seed < 400 && !found; ++seed) {
        const Instance inst = generate_random(4 + seed % 3, seed, {1, 15}, {1, 9}, {1, 9});
        const DominanceContext ctx(inst);
        for (int u = 0; u < inst.n() && !found; ++u)
            for (int v = 0; v < inst.n() && !found; ++v) {
                if (u == v)
                    continue;
                const BigMSwap m = ctx.big_m_swap(u, v);
                if (m.m_tilde < 0 && m.m_tilde % 2 != 0) {
                    found = true;
                    const MipModel model = build_model(inst, FormulationVariant::fs);
                    const std::string text = emit_lp(model);
                    CHECK(text.find(".5") != std::string::npos);
                    CHECK(parse_lp(text) == model);
                }
            }
    }
    CHECK(found);
}

TEST_CASE("objective equals the partition penalty at consistent points") {
    for (std::uint64_t seed : {91u, 92u}) {
        const int n = 3 + static_cast<int>(seed % 5);
        const Instance inst = generate_random(n, seed, {1, 12}, {1, 9}, {1, 9});
        const MipModel f2 = build_model(inst, FormulationVariant::f2);
        const MipModel fis = build_model(inst, FormulationVariant::fis);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const Partition part{delta_from_mask(mask, n)};
            const Encoding point = encode(part);
            CHECK(objective_value(f2, point) == evaluate_partition(inst, part));
            CHECK(point_feasible(f2, point));
            CHECK(point_feasible(fis, point) ==
                  check_dominance(inst, part.delta).empty());
        }
        const BruteForceResult best = brute_force(inst);
        CHECK(point_feasible(fis, encode(Partition{best.delta})));
    }
}

TEST_CASE("inconsistent pair values break pair feasibility") {
    const Instance i2 = make_two_task_instance();
    const MipModel f2 = build_model(i2, FormulationVariant::f2);
    Encoding point = encode(Partition{{1, 0}});
    point.x[0] = 0; // claims the pair sits on one side
    CHECK_FALSE(point_feasible(f2, point));
}

TEST_CASE("degenerate models still emit and round-trip") {
    SUBCASE("identical twins give a vacuous swap inequality") {
        const Instance twins({1, 1}, {1, 1}, {1, 1});
        const MipModel model = build_model(twins, FormulationVariant::fs);
        const auto& last = model.inequalities.back();
        CHECK(last.tag == IneqTag::swap);
        CHECK(last.coeffs.empty());
        const std::string text = emit_lp(model);
        CHECK(text.find("swap_1_2: 0 d_1 >= 0") != std::string::npos);
        CHECK(parse_lp(text) == model);
    }
    SUBCASE("single task has no pair variables") {
        const Instance one({3}, {2}, {7});
        const MipModel model = build_model(one, FormulationVariant::fis);
        CHECK(model.var_count() == 1);
        CHECK(model.inequalities.size() == 2); // the two insert inequalities
        const std::string text = emit_lp(model);
        CHECK(parse_lp(text) == model);
        const Encoding point = encode(Partition{{1}});
        CHECK(objective_value(model, point) == 0);
        CHECK(point_feasible(model, point));
    }
}

TEST_CASE("variant labels parse both ways") {
    CHECK(variant_from_string("f2") == FormulationVariant::f2);
    CHECK(variant_from_string("fis") == FormulationVariant::fis);
    CHECK(variant_to_string(FormulationVariant::fs) == "fs");
    CHECK_THROWS_AS(variant_from_string("f3"), std::invalid_argument);
}

TEST_CASE("lp text declares sections in order") {
    const Instance i2 = make_two_task_instance();
    const std::string text = emit_lp(build_model(i2, FormulationVariant::fis));
    const auto minimize = text.find("Minimize");
    const auto subject = text.find("Subject To");
    const auto bounds = text.find("Bounds");
    const auto binaries = text.find("Binaries");
    const auto end = text.find("End");
    CHECK(minimize < subject);
    CHECK(subject < bounds);
    CHECK(bounds < binaries);
    CHECK(binaries < end);
    CHECK(text.find("0 <= x_1_2 <= 1") != std::string::npos);
}
