#include "doctest.h"

#include <string>

#include "oracle.hpp"
#include "ucddp/instance.hpp"

using namespace ucddp;

namespace {

template <typename Fn>
std::string message_of(Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("parse_native reads the basic layout") {
    const Instance inst = parse_native("2\n1 1 2\n2 1 1\n");
    CHECK(inst.n() == 2);
    CHECK(inst.p(0) == 1);
    CHECK(inst.p(1) == 2);
    CHECK(inst.alpha(0) == 1);
    CHECK(inst.beta(0) == 2);
    CHECK(inst.beta(1) == 1);
    CHECK(inst.due_date() == 3); // defaults to sum(p)
}

TEST_CASE("parse_native single task") {
    const Instance inst = parse_native("1\n5 4 6\n");
    CHECK(inst.n() == 1);
    CHECK(inst.p(0) == 5);
    CHECK(inst.alpha(0) == 4);
    CHECK(inst.beta(0) == 6);
    CHECK(inst.due_date() == 5);
}

TEST_CASE("parse_native honors an explicit due date") {
    const Instance inst = parse_native("2\nd 10\n1 1 2\n2 1 1\n");
    CHECK(inst.due_date() == 10);
}

TEST_CASE("parse_native rejects bad input with line numbers") {
    CHECK(message_of([] { parse_native("2\n1 0 2\n2 1 1\n"); }) ==
          "line 2: alpha must be positive");
    CHECK(message_of([] { parse_native("2\n1 1 2\n2 1\n"); }) ==
          "line 3: expected three integers \"p alpha beta\"");
    CHECK(message_of([] { parse_native("1\n0 1 1\n"); }) == "line 2: p must be positive");
    CHECK(message_of([] { parse_native("2\n1 1 0\n2 1 1\n"); }) ==
          "line 2: beta must be positive");
    CHECK(message_of([] { parse_native("x\n1 1 1\n"); }) ==
          "line 1: expected a single integer task count");
    CHECK(message_of([] { parse_native("1\n1 1 1\n9 9 9\n"); }) ==
          "line 3: trailing content after task lines");
    CHECK_THROWS_AS(parse_native("2\nd 2\n1 1 2\n2 1 1\n"), parse_error);
    CHECK(message_of([] { parse_native("2\nd 2\n1 1 2\n2 1 1\n"); }).find("restrictive") !=
          std::string::npos);
}

TEST_CASE("instance construction validates invariants") {
    CHECK_THROWS_AS(Instance({}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Instance({1}, {1}, {1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Instance({1, 2}, {1}, {1, 1}), std::invalid_argument);
    // Penalty arithmetic guard.
    const std::int64_t big = std::int64_t{1} << 40;
    CHECK_THROWS_AS(Instance({big, big}, {big, big}, {big, big}), std::invalid_argument);
}

TEST_CASE("serialize/parse round trip is field-exact") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const Instance inst = generate_random(7, seed, {1, 20}, {1, 10}, {1, 10});
        const Instance back = parse_native(serialize_native(inst));
        CHECK(back == inst);
    }
    // Non-default due date survives the trip too.
    const Instance inst = parse_native("2\nd 9\n1 1 2\n2 1 1\n");
    CHECK(parse_native(serialize_native(inst)) == inst);
    CHECK(serialize_native(inst) == serialize_native(parse_native(serialize_native(inst))));
}

TEST_CASE("parse_orlib with a leading count line") {
    const std::string text = "1\n1 1 2\n2 1 1\n";
    const Instance inst = parse_orlib(text, 2, 1);
    CHECK(inst == testing::make_two_task_instance());
    CHECK(orlib_instance_count(text, 2) == 1);
    CHECK(message_of([&] { parse_orlib(text, 2, 2); }).find("index out of range") !=
          std::string::npos);
    CHECK(message_of([&] { parse_orlib(text, 2, 11); }).find("index out of range") !=
          std::string::npos);
}

TEST_CASE("parse_orlib without a count line") {
    const std::string text = "1 1 2\n2 1 1\n5 4 6\n3 2 1\n";
    CHECK(orlib_instance_count(text, 2) == 2);
    const Instance second = parse_orlib(text, 2, 2);
    CHECK(second.p(0) == 5);
    CHECK(second.beta(1) == 1);
    CHECK(second.due_date() == 8);
}

TEST_CASE("parse_orlib rejects token mismatches") {
    CHECK(message_of([] { parse_orlib("2\n1 1 2\n2 1 1\n", 2, 1); })
              .find("token count mismatch") != std::string::npos);
    CHECK_THROWS_AS(parse_orlib("1\n1 1 x\n2 1 1\n", 2, 1), parse_error);
}

TEST_CASE("generate_random is deterministic and respects ranges") {
    const Instance a = generate_random(5, 42, {1, 20}, {1, 10}, {1, 10});
    const Instance b = generate_random(5, 42, {1, 20}, {1, 10}, {1, 10});
    CHECK(a == b);
    CHECK(a.due_date() == a.total_processing());
    for (int j = 0; j < a.n(); ++j) {
        CHECK(a.p(j) >= 1);
        CHECK(a.p(j) <= 20);
        CHECK(a.alpha(j) <= 10);
        CHECK(a.beta(j) <= 10);
    }
    const Instance c = generate_random(5, 43, {1, 20}, {1, 10}, {1, 10});
    CHECK(a != c);

    const Instance fixed = generate_random(1, 0, {3, 3}, {2, 2}, {7, 7});
    CHECK(fixed.p(0) == 3);
    CHECK(fixed.alpha(0) == 2);
    CHECK(fixed.beta(0) == 7);
    CHECK(fixed.due_date() == 3);

    CHECK_THROWS_AS(generate_random(3, 0, {0, 5}, {1, 1}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_random(3, 0, {5, 4}, {1, 1}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_random(0, 0, {1, 1}, {1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("ratio comparisons are exact") {
    // 3/7 vs 2/5: cross products 15 vs 14.
    const Instance inst({7, 5}, {3, 2}, {2, 3});
    CHECK(alpha_ratio_greater(inst, 0, 1));
    CHECK_FALSE(alpha_ratio_greater(inst, 1, 0));
    CHECK(beta_ratio_greater(inst, 1, 0));
}
