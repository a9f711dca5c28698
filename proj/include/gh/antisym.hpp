#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gh/check.hpp"
#include "gh/poly.hpp"

namespace gh {

// Product over l = 1..n-1 and i = 1..n-1 of ((x1 + ... + xl) - m_i),
// expanded. Total degree (n-1)^2. 2 <= n <= 6.
Poly build_f(int n);

// Product over positions k < j of (x_{indices[k]} - x_{indices[j]}), over the
// arity-n variable set. At least 2 indices, all distinct, each in 1..n.
Poly vandermonde(int n, const std::vector<int>& indices);

// Sum over all pi in Sym(n) of sign(pi) * rename_vars(build_f(n), pi),
// exactly as written. Its integer content is 2 when n is odd, 1 when n is
// even. Results are cached per n. threads > 1 shards the permutations; the
// merged result is identical regardless.
Poly signed_permutation_sum(int n, int threads = 1, bool allow_big = false);

// Primitive part of signed_permutation_sum(n): the antisymmetric polynomial
// with content removed and signs preserved. This is the normalization under
// which the factorization and coefficient checks below hold. Cached per n.
// 2 <= n <= 5; n = 6 only with allow_big (720 degree-25 summands).
Poly antisymmetrize(int n, int threads = 1, bool allow_big = false);

// antisymmetrize(n) divided by vandermonde over all n x-variables. The
// division is guaranteed exact by antisymmetry; failure throws
// VerificationError. Cached per n.
Poly quotient_by_vandermonde(int n);

// f at the given variable order minus f with the last two entries swapped,
// expanded. prefix must be a permutation of {1..n}.
Poly pair_difference(int n, const std::vector<int>& prefix);

// All coprime (alpha, beta) with 1 <= alpha, beta <= bound such that
// alpha*(x1+..+xn) - beta*(m1+..+m(n-1)) exactly divides
// quotient_by_vandermonde(n). Ascending alpha, then beta.
std::vector<std::pair<int, int>> linear_sum_factor_scan(int n, int bound);

// True iff quotient_by_vandermonde(n) vanishes at (a, m). For n = 3 this is
// sum(a) == m1 + m2; for n = 4 it is (3*sum(a) - 2*sum(m)) * Q4(a, m) == 0
// for the symmetric quadratic factor Q4.
bool is_singular(int n, const std::vector<Rat>& a, const std::vector<Rat>& m);

// Hypothesis report for the nonvanishing-witness lemma: if total_degree(p)
// equals sum(t), the coefficient of the t-monomial is nonzero, and
// t[i] < |sets[i]| for every slot, then some point of the product set has
// p != 0, and an exhaustive search finds one. sets and t cover all 2n-1
// slots; pass {0} with t = 0 for slots the caller does not care about.
struct Lemma1Report {
  bool degree_matches = false;
  bool coeff_nonzero = false;
  bool sets_large_enough = false;
  Int coeff;
  uint64_t poly_degree = 0;
  uint64_t target_sum = 0;
  std::optional<std::vector<Rat>> witness;
  bool applicable() const { return degree_matches && coeff_nonzero && sets_large_enough; }
};
Lemma1Report lemma1_check(const Poly& p, const std::vector<std::vector<Rat>>& sets,
                          const Mono& t);

// True iff every monomial of antisymmetrize(3) with x-degree 4 has some
// x-exponent >= 3 (so no such monomial has all x-exponents <= 2). n must be 3.
bool unsuitable_monomial_audit(int n);

// x1 + ... + xn and m1 + ... + m(n-1) over the arity-n variable set.
Poly sum_of_x(int n);
Poly sum_of_m(int n);

// One archived coefficient fixture: exponents of the x- and m-block
// factors (1-based index, exponent) and the expected value in
// quotient_by_vandermonde(5).
struct CoeffFixture {
  std::vector<std::pair<int, int>> xs;
  std::vector<std::pair<int, int>> ms;
  long long value;
};
const std::vector<CoeffFixture>& quotient5_named_fixtures();   // the 5 headline ones
const std::vector<CoeffFixture>& quotient5_extra_fixtures();   // 48 more

Mono fixture_mono(int n, const CoeffFixture& f);

// Archived text of the published quadratic factor for n = 4. It names m4,
// which does not exist at arity 4, so it cannot be parsed; the verified
// factor is the computed quotient. factor_checks(4) reports that the two
// differ exactly by reading the 8*(...) block as pairwise x-products.
const std::string& published_quadratic_text_n4();

// Full verification suites per arity, as report lines. n in {3, 4, 5}.
std::vector<Check> factor_checks(int n);

}  // namespace gh
