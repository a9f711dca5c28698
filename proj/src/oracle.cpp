#include "gh/oracle.hpp"

#include <algorithm>
#include <map>

namespace gh {

namespace {

void extend_order(const std::vector<Rat>& pool, std::vector<bool>& used,
                  const std::vector<Rat>& blocked, std::vector<Rat>& prefix, const Rat& reached,
                  std::vector<std::vector<Rat>>& out) {
  std::size_t n = pool.size();
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  bool is_last = prefix.size() + 1 == n;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    Rat next = reached + pool[i];
    // Only proper prefixes can land on a blocked point; the final landing is
    // the total, which a valid instance keeps out of the blocked set.
    if (!is_last && std::binary_search(blocked.begin(), blocked.end(), next)) continue;
    used[i] = true;
    prefix.push_back(pool[i]);
    extend_order(pool, used, blocked, prefix, next, out);
    prefix.pop_back();
    used[i] = false;
  }
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<std::vector<Rat>> enumerate_safe_orders(const Instance& inst) {
  if (inst.lengths.size() > 8)
    throw UsageError("exhaustive order enumeration is limited to 8 lengths");
  std::vector<Rat> pool = inst.lengths;
  std::sort(pool.begin(), pool.end());
  std::vector<bool> used(pool.size(), false);
  std::vector<Rat> prefix;
  std::vector<std::vector<Rat>> out;
  extend_order(pool, used, inst.blocked, prefix, Rat(0), out);
  return out;
}

bool has_distinct_subset_sums(const std::vector<Rat>& lengths) {
  if (lengths.size() > 20) throw UsageError("subset sum check is limited to 20 lengths");
  std::vector<Rat> sums{Rat(0)};
  sums.reserve(std::size_t(1) << lengths.size());
  for (const Rat& a : lengths) {
    std::size_t k = sums.size();
    for (std::size_t i = 0; i < k; ++i) sums.push_back(sums[i] + a);
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> find_subset_sum_collision(
    const std::vector<Rat>& lengths) {
  if (lengths.size() > 20) throw UsageError("subset sum check is limited to 20 lengths");
  std::map<Rat, unsigned long> first_seen;
  auto subset = [&](unsigned long mask) {
    std::vector<Rat> v;
    for (std::size_t i = 0; i < lengths.size(); ++i)
      if (mask >> i & 1) v.push_back(lengths[i]);
    return v;
  };
  unsigned long top = 1ul << lengths.size();
  for (unsigned long mask = 0; mask < top; ++mask) {
    Rat sum = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i)
      if (mask >> i & 1) sum += lengths[i];
    auto [it, fresh] = first_seen.emplace(sum, mask);
    if (!fresh) return std::make_pair(subset(it->second), subset(mask));
  }
  return std::nullopt;
}

Int orders_with_prefix_set_count(int n, int l) {
  if (l < 1 || l > n - 1) throw UsageError("prefix size must satisfy 1 <= l <= n-1");
  return factorial(l) * factorial(n - l);
}

Theorem2Report theorem2_bound_check(const Instance& inst) {
  Theorem2Report rep;
  int n = static_cast<int>(inst.lengths.size());
  rep.total = factorial(n);
  rep.bound = factorial(n - 1);
  if (n > 7 || !has_distinct_subset_sums(inst.lengths)) return rep;
  rep.applicable = true;
  rep.safe_count = static_cast<long>(enumerate_safe_orders(inst).size());
  rep.bound_holds = rep.safe_count >= rep.bound;
  rep.line = "safe=" + rep.safe_count.str() + " total=" + rep.total.str() +
             " bound=" + rep.bound.str();
  return rep;
}

}  // namespace gh
