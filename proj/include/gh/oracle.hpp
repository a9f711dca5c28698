#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gh/numbers.hpp"
#include "gh/solver.hpp"

namespace gh {

// Every safe order of the instance, in lexicographic order by jump value.
// Exhaustive with prefix pruning; n <= 8.
std::vector<std::vector<Rat>> enumerate_safe_orders(const Instance& inst);

// True iff all 2^n subset sums are pairwise distinct. n <= 20.
bool has_distinct_subset_sums(const std::vector<Rat>& lengths);

// First pair of distinct index subsets with equal sums, in increasing
// bitmask order (bit i = lengths[i]); nullopt when sums are distinct.
std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> find_subset_sum_collision(
    const std::vector<Rat>& lengths);

// l! * (n-l)!: the number of orders whose first l jumps form one fixed
// l-element subset. 1 <= l <= n-1.
Int orders_with_prefix_set_count(int n, int l);

// When the lengths have pairwise distinct subset sums, at least (n-1)! of
// the n! orders are safe. Inapplicable (not a failure) when sums collide or
// n > 7 makes the exhaustive count too big.
struct Theorem2Report {
  bool applicable = false;
  Int safe_count = 0;
  Int total = 0;  // n!
  Int bound = 0;  // (n-1)!
  bool bound_holds = false;
  std::string line;  // "safe=<k> total=<n!> bound=<(n-1)!>"
};

Theorem2Report theorem2_bound_check(const Instance& inst);

}  // namespace gh
