#include "doctest.h"

#include "gh/oracle.hpp"

using namespace gh;

namespace {

std::vector<Rat> rats(std::initializer_list<long long> xs) {
  std::vector<Rat> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("exhaustive enumeration, smallest cases") {
    Instance two = validate(rats({1, 2}), rats({1}));
    auto orders2 = enumerate_safe_orders(two);
    REQUIRE(orders2.size() == 1);
    CHECK(orders2[0] == rats({2, 1}));

    Instance three = validate(rats({1, 2, 3}), rats({3, 5}));
    auto orders3 = enumerate_safe_orders(three);
    REQUIRE(orders3.size() == 1);
    CHECK(orders3[0] == rats({1, 3, 2}));
  }

  TEST_CASE("enumeration is lexicographic by jump value") {
    Instance inst = validate(rats({1, 2, 3}), rats({1, 2}));
    auto orders = enumerate_safe_orders(inst);
    REQUIRE(orders.size() == 2);
    CHECK(orders[0] == rats({3, 1, 2}));
    CHECK(orders[1] == rats({3, 2, 1}));
  }

  TEST_CASE("enumeration size guard") {
    std::vector<Rat> lengths, blocked;
    for (int i = 1; i <= 9; ++i) lengths.emplace_back(i);
    for (int i = 1; i <= 8; ++i) blocked.emplace_back(i);
    Instance big = validate(lengths, blocked);
    CHECK_THROWS_AS(enumerate_safe_orders(big), UsageError);
  }

  TEST_CASE("distinct subset sums") {
    CHECK(has_distinct_subset_sums(rats({1, 2, 4, 8})));
    CHECK_FALSE(has_distinct_subset_sums(rats({1, 2, 3})));
    CHECK(has_distinct_subset_sums(rats({3, 5, 6, 7})));
    CHECK(has_distinct_subset_sums({}));
    std::vector<Rat> too_many(21, Rat(1));
    CHECK_THROWS_AS(has_distinct_subset_sums(too_many), UsageError);
  }

  TEST_CASE("first subset sum collision") {
    auto hit = find_subset_sum_collision(rats({1, 2, 3}));
    REQUIRE(hit.has_value());
    CHECK(hit->first == rats({1, 2}));
    CHECK(hit->second == rats({3}));
    CHECK_FALSE(find_subset_sum_collision(rats({1, 2, 4, 8})).has_value());
  }

  TEST_CASE("orders sharing a fixed prefix set") {
    CHECK(orders_with_prefix_set_count(4, 1) == 6);
    CHECK(orders_with_prefix_set_count(4, 2) == 4);
    CHECK(orders_with_prefix_set_count(4, 3) == 6);
    CHECK(orders_with_prefix_set_count(5, 3) == 12);
    CHECK(orders_with_prefix_set_count(2, 1) == 1);
    CHECK_THROWS_AS(orders_with_prefix_set_count(4, 0), UsageError);
    CHECK_THROWS_AS(orders_with_prefix_set_count(4, 4), UsageError);
  }

  TEST_CASE("safe-order count bound, applicable case") {
    Instance inst = validate(rats({1, 2, 4, 8}), rats({1, 3, 5}));
    auto rep = theorem2_bound_check(inst);
    CHECK(rep.applicable);
    CHECK(rep.total == 24);
    CHECK(rep.bound == 6);
    CHECK(rep.bound_holds);
    CHECK(rep.safe_count >= rep.bound);
    CHECK(Int(enumerate_safe_orders(inst).size()) == rep.safe_count);
    CHECK(rep.line == "safe=" + rep.safe_count.str() + " total=24 bound=6");
  }

  TEST_CASE("safe-order count bound, inapplicable cases") {
    // Colliding subset sums: the hypothesis fails, which is not an error.
    Instance collide = validate(rats({1, 2, 3}), rats({1, 5}));
    auto rep = theorem2_bound_check(collide);
    CHECK_FALSE(rep.applicable);

    // Too large to count exhaustively.
    std::vector<Rat> lengths, blocked;
    for (int i = 0; i < 8; ++i) lengths.emplace_back(1LL << i);
    for (int i = 1; i <= 7; ++i) blocked.emplace_back(2 * i);
    auto big = theorem2_bound_check(validate(lengths, blocked));
    CHECK_FALSE(big.applicable);
  }
}
