#include "gh/antisym.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "gh/perm.hpp"

namespace gh {

Poly build_f(int n) {
  if (n < 2 || n > 6) throw UsageError("build_f arity must be in 2..6");
  Poly f = Poly::constant(n, 1);
  Poly prefix(n);
  for (int l = 1; l <= n - 1; ++l) {
    prefix = prefix + Poly::x(n, l);
    for (int i = 1; i <= n - 1; ++i) f = f * (prefix - Poly::m(n, i));
  }
  return f;
}

Poly vandermonde(int n, const std::vector<int>& indices) {
  if (indices.size() < 2) throw UsageError("vandermonde needs at least 2 indices");
  std::vector<bool> seen(n, false);
  for (int i : indices) {
    if (i < 1 || i > n || seen[i - 1]) throw UsageError("vandermonde indices must be distinct and in 1..n");
    seen[i - 1] = true;
  }
  Poly v = Poly::constant(n, 1);
  for (std::size_t k = 0; k + 1 < indices.size(); ++k)
    for (std::size_t j = k + 1; j < indices.size(); ++j)
      v = v * (Poly::x(n, indices[k]) - Poly::x(n, indices[j]));
  return v;
}

namespace {

// Adds sign * (f with x-slots permuted by images) into acc.
void accumulate_renamed(Poly& acc, const Poly& f, const std::vector<int>& images, int sgn) {
  int n = f.arity();
  Mono key(f.slots());
  for (const auto& [mo, c] : f.terms()) {
    std::fill(key.begin(), key.begin() + n, 0);
    for (int i = 0; i < n; ++i) key[images[i] - 1] = mo[i];
    for (int i = n; i < f.slots(); ++i) key[i] = mo[i];
    acc.add_term(key, sgn > 0 ? c : -c);
  }
}

void check_antisym_arity(int n, bool allow_big) {
  int cap = allow_big ? 6 : 5;
  if (n < 2 || n > cap)
    throw UsageError("antisymmetrization arity must be in 2.." + std::to_string(cap));
}

std::mutex cache_mutex;

}  // namespace

Poly signed_permutation_sum(int n, int threads, bool allow_big) {
  check_antisym_arity(n, allow_big);
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  Poly f = build_f(n);
  std::vector<Permutation> perms = enumerate_permutations(n);
  std::vector<int> signs(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) signs[i] = sign(perms[i]);

  Poly acc(n);
  threads = std::max(1, std::min<int>(threads, static_cast<int>(perms.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      accumulate_renamed(acc, f, perms[i].images, signs[i]);
  } else {
    // Shard the permutation list; merging partial sums by addition is
    // order-independent, so the result matches the sequential one exactly.
    std::vector<Poly> parts(threads, Poly(n));
    std::vector<std::thread> pool;
    std::size_t chunk = (perms.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        std::size_t lo = t * chunk, hi = std::min(perms.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i)
          accumulate_renamed(parts[t], f, perms[i].images, signs[i]);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) acc = acc + part;
  }
  cache.emplace(n, acc);
  return acc;
}

Poly antisymmetrize(int n, int threads, bool allow_big) {
  check_antisym_arity(n, allow_big);
  {
    static std::map<int, Poly> cache;
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    Poly prim = primitive_part(signed_permutation_sum(n, threads, allow_big));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(n, std::move(prim)).first->second;
  }
}

Poly quotient_by_vandermonde(int n) {
  static std::map<int, Poly> cache;
  Poly fn = antisymmetrize(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  auto q = try_exact_divide(fn, vandermonde(n, all));
  if (!q)
    throw VerificationError("antisymmetrized polynomial is not divisible by its Vandermonde factor");
  return cache.emplace(n, std::move(*q)).first->second;
}

Poly pair_difference(int n, const std::vector<int>& prefix) {
  if (n < 2 || n > 6) throw UsageError("pair_difference arity must be in 2..6");
  Permutation p{prefix};
  if (static_cast<int>(prefix.size()) != n || !is_bijection(p))
    throw UsageError("prefix must be a permutation of {1..n}");
  Poly f = build_f(n);
  std::vector<int> swapped = prefix;
  std::swap(swapped[n - 1], swapped[n - 2]);
  return rename_vars(f, prefix) - rename_vars(f, swapped);
}

std::vector<std::pair<int, int>> linear_sum_factor_scan(int n, int bound) {
  if (n < 2 || n > 5) throw UsageError("linear_sum_factor_scan arity must be in 2..5");
  if (bound < 1) throw UsageError("scan bound must be at least 1");
  Poly q = quotient_by_vandermonde(n);
  Poly sx = sum_of_x(n), sm = sum_of_m(n);
  std::vector<std::pair<int, int>> hits;
  for (int a = 1; a <= bound; ++a)
    for (int b = 1; b <= bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      if (try_exact_divide(q, Int(a) * sx - Int(b) * sm)) hits.emplace_back(a, b);
    }
  return hits;
}

bool is_singular(int n, const std::vector<Rat>& a, const std::vector<Rat>& m) {
  if (n != 3 && n != 4) throw UsageError("singularity test is defined for arity 3 and 4");
  if (static_cast<int>(a.size()) != n || static_cast<int>(m.size()) != n - 1)
    throw UsageError("point arity mismatch");
  std::vector<Rat> point = a;
  point.insert(point.end(), m.begin(), m.end());
  return evaluate(quotient_by_vandermonde(n), point) == 0;
}

Lemma1Report lemma1_check(const Poly& p, const std::vector<std::vector<Rat>>& sets,
                          const Mono& t) {
  if (static_cast<int>(sets.size()) != p.slots() || static_cast<int>(t.size()) != p.slots())
    throw UsageError("lemma1_check needs one set and one target exponent per variable");
  for (const auto& s : sets)
    if (s.empty()) throw UsageError("every set must be nonempty");

  Lemma1Report rep;
  rep.poly_degree = total_degree(p);
  rep.target_sum = mono_degree(t);
  rep.degree_matches = rep.poly_degree == rep.target_sum;
  rep.coeff = coefficient_of(p, t);
  rep.coeff_nonzero = rep.coeff != 0;
  rep.sets_large_enough = true;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (static_cast<uint64_t>(t[i]) >= sets[i].size()) rep.sets_large_enough = false;
  if (!rep.applicable()) return rep;

  uint64_t space = 1;
  for (const auto& s : sets) {
    space *= s.size();
    if (space > (1u << 22)) throw UsageError("witness search space too large");
  }
  std::vector<std::size_t> idx(sets.size(), 0);
  std::vector<Rat> point(sets.size());
  for (;;) {
    for (std::size_t i = 0; i < sets.size(); ++i) point[i] = sets[i][idx[i]];
    if (evaluate(p, point) != 0) {
      rep.witness = point;
      return rep;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == sets[i].size()) idx[i++] = 0;
    if (i == idx.size()) return rep;  // exhausted with no witness
  }
}

bool unsuitable_monomial_audit(int n) {
  if (n != 3) throw UsageError("the degree-4 monomial audit is defined for arity 3");
  Poly f = antisymmetrize(3);
  for (const auto& [mo, c] : f.terms()) {
    uint64_t xdeg = mo[0] + mo[1] + mo[2];
    if (xdeg == 4 && std::max({mo[0], mo[1], mo[2]}) < 3) return false;
  }
  return true;
}

Poly sum_of_x(int n) {
  Poly s(n);
  for (int i = 1; i <= n; ++i) s = s + Poly::x(n, i);
  return s;
}

Poly sum_of_m(int n) {
  Poly s(n);
  for (int j = 1; j <= n - 1; ++j) s = s + Poly::m(n, j);
  return s;
}

Mono fixture_mono(int n, const CoeffFixture& f) {
  Mono mo(2 * n - 1, 0);
  for (auto [i, e] : f.xs) mo[i - 1] = static_cast<uint32_t>(e);
  for (auto [j, e] : f.ms) mo[n + j - 1] = static_cast<uint32_t>(e);
  return mo;
}

const std::vector<CoeffFixture>& quotient5_named_fixtures() {
  static const std::vector<CoeffFixture> k = {
      {{{1, 6}}, {}, 616},
      {{{1, 5}, {2, 1}}, {}, 2440},
      {{{1, 5}}, {{1, 1}}, -1516},
      {{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, {{1, 1}}, -68700},
      {{}, {{3, 4}, {4, 2}}, 21},
  };
  return k;
}

const std::vector<CoeffFixture>& quotient5_extra_fixtures() {
  static const std::vector<CoeffFixture> k = {
      {{{1, 4}, {2, 2}}, {}, 4708},
      {{{1, 3}, {2, 3}}, {}, 5744},
      {{{1, 4}, {2, 1}, {3, 1}}, {}, 8332},
      {{{1, 3}, {2, 2}, {3, 1}}, {}, 13692},
      {{{1, 2}, {2, 2}, {3, 2}}, {}, 18436},
      {{{1, 3}, {2, 1}, {3, 1}, {4, 1}}, {}, 24040},
      {{{1, 2}, {2, 2}, {3, 1}, {4, 1}}, {}, 32280},
      {{{1, 2}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, {}, 56328},
      {{{1, 4}, {2, 1}}, {{1, 1}}, -5404},
      {{{1, 3}, {2, 2}}, {{1, 1}}, -9094},
      {{{1, 3}, {2, 1}, {3, 1}}, {{1, 1}}, -16178},
      {{{1, 2}, {2, 2}, {3, 1}}, {{1, 1}}, -22010},
      {{{1, 2}, {2, 1}, {3, 1}, {4, 1}}, {{1, 1}}, -38946},
      {{{1, 4}}, {{1, 2}}, 1305},
      {{{1, 3}, {2, 1}}, {{1, 2}}, 4020},
      {{{1, 2}, {2, 2}}, {{1, 2}}, 5523},
      {{{1, 2}, {2, 1}, {3, 1}}, {{1, 2}}, 9883},
      {{{1, 1}, {2, 1}, {3, 1}, {4, 1}}, {{1, 2}}, 17634},
      {{{1, 3}}, {{1, 3}}, -459},
      {{{1, 2}, {2, 1}}, {{1, 3}}, -1152},
      {{{1, 1}, {2, 1}, {3, 1}}, {{1, 3}}, -2079},
      {{{1, 2}}, {{1, 4}}, 54},
      {{{1, 1}, {2, 1}}, {{1, 4}}, 99},
      {{{1, 4}}, {{1, 1}, {2, 1}}, 3450},
      {{{1, 3}, {2, 1}}, {{1, 1}, {2, 1}}, 10664},
      {{{1, 2}, {2, 2}}, {{1, 1}, {2, 1}}, 14674},
      {{{1, 2}, {2, 1}, {3, 1}}, {{1, 1}, {2, 1}}, 26298},
      {{{1, 1}, {2, 1}, {3, 1}, {4, 1}}, {{1, 1}, {2, 1}}, 47004},
      {{{1, 3}}, {{1, 2}, {2, 1}}, -2663},
      {{{1, 2}, {2, 1}}, {{1, 2}, {2, 1}}, -6694},
      {{{1, 1}, {2, 1}, {3, 1}}, {{1, 2}, {2, 1}}, -12093},
      {{{1, 2}}, {{1, 3}, {2, 1}}, 798},
      {{{1, 1}, {2, 1}}, {{1, 3}, {2, 1}}, 1458},
      {{{1, 1}}, {{1, 4}, {2, 1}}, -72},
      {{{1, 3}}, {{1, 1}, {2, 1}, {3, 1}}, -6912},
      {{{1, 2}, {2, 1}}, {{1, 1}, {2, 1}, {3, 1}}, -17390},
      {{{1, 1}, {2, 1}, {3, 1}}, {{1, 1}, {2, 1}, {3, 1}}, -31434},
      {{{1, 2}}, {{1, 2}, {2, 1}, {3, 1}}, 4452},
      {{{1, 1}, {2, 1}}, {{1, 2}, {2, 1}, {3, 1}}, 8122},
      {{{1, 1}}, {{1, 3}, {2, 1}, {3, 1}}, -1002},
      {{}, {{1, 4}, {2, 1}, {3, 1}}, 51},
      {{{1, 2}}, {{1, 2}, {2, 2}}, 1748},
      {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}, 3190},
      {{{1, 1}}, {{1, 2}, {2, 2}, {3, 1}}, -2158},
      {{}, {{1, 2}, {2, 2}, {3, 2}}, 593},
      {{}, {{1, 3}, {2, 2}, {3, 1}}, 279},
      {{}, {{1, 1}, {2, 1}, {3, 2}, {4, 2}}, 1456},
      {{}, {{1, 1}, {2, 1}, {3, 1}, {4, 3}}, 684},
  };
  return k;
}

const std::string& published_quadratic_text_n4() {
  static const std::string k =
      "6(x1^2+x2^2+x3^2+x4^2)"
      "+8(m1m2+m1m3+m1m4+m2m3+m2m4+m3m4)"
      "-7(m1+m2+m3)(x1+x2+x3+x4)"
      "+(m1^2+m2^2+m3^2+6m1m2+6m2m3+6m3m1)";
  return k;
}

namespace {

// The symmetric quadratic the n=4 division actually produces.
Poly quadratic_factor_candidate_n4() {
  const int n = 4;
  Poly c(n);
  for (int i = 1; i <= 4; ++i) c = c + Int(6) * (Poly::x(n, i) * Poly::x(n, i));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) c = c + Int(8) * (Poly::x(n, i) * Poly::x(n, j));
  c = c - Int(7) * (sum_of_m(n) * sum_of_x(n));
  for (int j = 1; j <= 3; ++j) c = c + Poly::m(n, j) * Poly::m(n, j);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) c = c + Int(6) * (Poly::m(n, i) * Poly::m(n, j));
  return c;
}

// Right-hand sides of the three corrected two-order difference identities at
// n=3: the published forms drop the trailing x-difference factor, which the
// degree count alone rules out.
Poly corrected_difference_rhs_n3(int top, int lo, int hi) {
  const int n = 3;
  Poly pre = (Poly::x(n, top) - Poly::m(n, 1)) * (Poly::x(n, top) - Poly::m(n, 2));
  Poly lin = Poly::x(n, top) + sum_of_x(n) - sum_of_m(n);
  return pre * (Poly::x(n, lo) - Poly::x(n, hi)) * lin;
}

Poly eq17_quadratic() {
  const int n = 4;
  Poly q(n);
  q = q + Int(3) * (Poly::x(n, 1) * Poly::x(n, 1));
  q = q + Int(3) * (Poly::x(n, 2) * Poly::x(n, 2));
  q = q + Poly::x(n, 3) * Poly::x(n, 3);
  q = q + Poly::x(n, 4) * Poly::x(n, 4);
  q = q + Int(6) * (Poly::x(n, 1) * Poly::x(n, 2));
  q = q + Int(3) * (Poly::x(n, 1) * Poly::x(n, 3));
  q = q + Int(3) * (Poly::x(n, 1) * Poly::x(n, 4));
  q = q + Int(3) * (Poly::x(n, 2) * Poly::x(n, 3));
  q = q + Int(3) * (Poly::x(n, 2) * Poly::x(n, 4));
  q = q + Poly::x(n, 3) * Poly::x(n, 4);
  Poly lin = Int(2) * Poly::x(n, 1) + Int(2) * Poly::x(n, 2) + Poly::x(n, 3) + Poly::x(n, 4);
  q = q - sum_of_m(n) * lin;
  q = q + Poly::m(n, 1) * Poly::m(n, 2);
  q = q + Poly::m(n, 1) * Poly::m(n, 3);
  q = q + Poly::m(n, 2) * Poly::m(n, 3);
  return q;
}

Poly eq17_prefix_factor() {
  const int n = 4;
  Poly pre = Poly::constant(n, 1);
  for (int j = 1; j <= 3; ++j) pre = pre * (Poly::x(n, 1) - Poly::m(n, j));
  for (int j = 1; j <= 3; ++j)
    pre = pre * (Poly::x(n, 1) + Poly::x(n, 2) - Poly::m(n, j));
  return pre;
}

std::string pair_list(const std::vector<std::pair<int, int>>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << '(' << v[i].first << ',' << v[i].second << ')';
  }
  out << ']';
  return out.str();
}

std::vector<Check> factor_checks_n3() {
  std::vector<Check> cs;
  const int n = 3;
  Poly F = antisymmetrize(3);
  Poly rhs = vandermonde(n, {1, 2, 3}) * (sum_of_x(n) - sum_of_m(n));
  cs.push_back({"eq6", F == rhs, "antisymmetrized n=3 polynomial equals Vandermonde times the linear sum factor"});
  cs.push_back({"eq6-quotient", quotient_by_vandermonde(3) == sum_of_x(n) - sum_of_m(n), ""});

  cs.push_back({"eq7", pair_difference(3, {1, 2, 3}) == corrected_difference_rhs_n3(1, 2, 3),
                "difference of the (1,2,3) and (1,3,2) orders, with the (x2-x3) factor restored"});
  cs.push_back({"eq8", pair_difference(3, {2, 1, 3}) == corrected_difference_rhs_n3(2, 1, 3),
                "difference of the (2,1,3) and (2,3,1) orders, with the (x1-x3) factor restored"});
  cs.push_back({"eq9", pair_difference(3, {3, 1, 2}) == corrected_difference_rhs_n3(3, 1, 2),
                "difference of the (3,1,2) and (3,2,1) orders, with the (x1-x2) factor restored"});

  cs.push_back({"deg4-audit", unsuitable_monomial_audit(3),
                "every x-degree-4 monomial has an x-exponent of at least 3"});
  Mono x31(5, 0);
  x31[0] = 3; x31[1] = 1;
  cs.push_back({"coeff-x1^3x2", coefficient_of(F, x31) == 1, "value " + coefficient_of(F, x31).str()});
  Mono x22(5, 0);
  x22[0] = 2; x22[1] = 2;
  cs.push_back({"coeff-x1^2x2^2-cancelled", coefficient_of(F, x22) == 0,
                "antisymmetrization cancels the square monomial"});
  cs.push_back({"coeff-f3-x1^2x2^2", coefficient_of(build_f(3), x22) == 1,
                "the base product keeps it with coefficient 1"});

  auto hits = linear_sum_factor_scan(3, 10);
  cs.push_back({"scan-n3", hits == std::vector<std::pair<int, int>>{{1, 1}}, pair_list(hits)});
  return cs;
}

std::vector<Check> factor_checks_n4() {
  std::vector<Check> cs;
  const int n = 4;
  Poly F = antisymmetrize(4);
  Poly q = quotient_by_vandermonde(4);
  Poly lin = Int(3) * sum_of_x(n) - Int(2) * sum_of_m(n);
  auto Q4 = try_exact_divide(q, lin);
  cs.push_back({"eq16-divisors", Q4.has_value(),
                "Vandermonde and 3*sum(x)-2*sum(m) divide the antisymmetrized polynomial exactly"});
  if (!Q4) return cs;

  bool symmetric = true;
  for (const auto& perm : enumerate_permutations(4))
    if (rename_vars(*Q4, perm.images) != *Q4) symmetric = false;
  cs.push_back({"q4-symmetric", symmetric, "quadratic factor invariant under all 24 x-permutations"});

  Poly cand = quadratic_factor_candidate_n4();
  cs.push_back({"q4-quadratic", *Q4 == cand,
                "quadratic factor is 6*sum(x_i^2)+8*sum(x_i*x_j)-7*sum(m)*sum(x)+sum(m_j^2)+6*sum(m_i*m_j)"});

  bool mentions_m4 = published_quadratic_text_n4().find("m4") != std::string::npos;
  cs.push_back({"eq16-archived-text", mentions_m4 && *Q4 == cand,
                "archived printed factor names m4 (impossible at arity 4); reading its 8*(...) block "
                "as pairwise x-products instead yields exactly the computed factor"});

  Poly pre = eq17_prefix_factor();
  Poly quad = eq17_quadratic();
  Poly rhs17 = pre * (Poly::x(n, 3) - Poly::x(n, 4)) * quad;
  cs.push_back({"eq17", pair_difference(4, {1, 2, 3, 4}) == rhs17,
                "difference of the (1,2,3,4) and (1,2,4,3) orders matches the printed product, (x3-x4) factor included"});

  std::vector<Rat> pt = {1, 4, 2, 3, 2, 3, 10};
  Rat fval = evaluate(F, pt);
  Rat lval = evaluate(lin, pt);
  Rat qval = evaluate(quad, pt);
  cs.push_back({"singular-eval", fval == 0 && lval == 0 && qval == 0,
                "full polynomial, linear factor, and quadratic all vanish at x=(1,4,2,3), m=(2,3,10)"});
  Rat pval = evaluate(pre, pt);
  cs.push_back({"prefix-factor", pval == 540,
                "six-root prefix factor at the singular point is " + format_rat(pval) + ", nonzero"});

  auto hits = linear_sum_factor_scan(4, 10);
  cs.push_back({"scan-n4", hits == std::vector<std::pair<int, int>>{{3, 2}}, pair_list(hits)});
  return cs;
}

std::vector<Check> factor_checks_n5() {
  std::vector<Check> cs;
  Poly q = quotient_by_vandermonde(5);
  cs.push_back({"v5-divides", true,
                "Vandermonde division exact; quotient has " + std::to_string(q.term_count()) + " terms"});

  bool named_ok = true;
  std::string bad;
  for (const auto& f : quotient5_named_fixtures()) {
    Int got = coefficient_of(q, fixture_mono(5, f));
    if (got != f.value) {
      named_ok = false;
      bad += " got " + got.str() + " want " + std::to_string(f.value);
    }
  }
  cs.push_back({"archived-named", named_ok,
                named_ok ? "all 5 headline coefficients match" : bad});

  int extra_bad = 0;
  for (const auto& f : quotient5_extra_fixtures())
    if (coefficient_of(q, fixture_mono(5, f)) != f.value) ++extra_bad;
  cs.push_back({"archived-extras", extra_bad == 0,
                std::to_string(quotient5_extra_fixtures().size()) + " archived coefficients, " +
                    std::to_string(extra_bad) + " mismatches"});

  auto hits = linear_sum_factor_scan(5, 10);
  cs.push_back({"scan-n5-empty", hits.empty(), pair_list(hits)});
  return cs;
}

}  // namespace

std::vector<Check> factor_checks(int n) {
  switch (n) {
    case 3: return factor_checks_n3();
    case 4: return factor_checks_n4();
    case 5: return factor_checks_n5();
    default: throw UsageError("factor checks are defined for arity 3, 4, 5");
  }
}

}  // namespace gh
