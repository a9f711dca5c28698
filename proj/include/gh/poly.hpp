#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gh/numbers.hpp"

namespace gh {

// Exponent vector over the fixed variable list x1..xn, m1..m(n-1).
// Length is always 2n-1: slots 0..n-1 hold the x-block, n..2n-2 the m-block.
using Mono = std::vector<uint32_t>;

uint64_t mono_degree(const Mono& m);

// Graded-lex, ascending: total degree first, ties broken by the exponent
// vector with x1 most significant. std::map<Mono, ..., GrlexLess> therefore
// stores the leading term at rbegin().
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse polynomial with arbitrary-precision integer coefficients.
// Invariants: every stored coefficient is nonzero; every key has length
// 2*arity-1. The zero polynomial has an empty term map.
class Poly {
 public:
  Poly() = default;  // arity 0 placeholder; usable only as assignment target
  explicit Poly(int arity);

  int arity() const { return n_; }
  int slots() const { return 2 * n_ - 1; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Int, GrlexLess>& terms() const { return terms_; }

  // Accumulates c into the coefficient at mono, dropping it if it cancels.
  void add_term(const Mono& mono, const Int& c);

  static Poly constant(int arity, const Int& c);
  // 1-based variable factories: x(n, i) for 1 <= i <= n, m(n, j) for
  // 1 <= j <= n-1.
  static Poly x(int arity, int i);
  static Poly m(int arity, int j);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  int n_ = 0;
  std::map<Mono, Int, GrlexLess> terms_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Int& c, const Poly& a);

// Largest total degree over all terms; 0 for the zero polynomial.
uint64_t total_degree(const Poly& p);

// Quotient q with p = q*d exactly, or nullopt when no such polynomial with
// integer coefficients exists. Division tracks graded-lex leading terms, so a
// failed monomial or coefficient division at any step proves indivisibility.
std::optional<Poly> try_exact_divide(const Poly& p, const Poly& d);

// Exact value at a rational point; point holds x1..xn, m1..m(n-1).
Rat evaluate(const Poly& p, const std::vector<Rat>& point);

Int coefficient_of(const Poly& p, const Mono& mono);

// Substitutes x_i -> x_{images[i-1]}; images must be a bijection of {1..n}.
// The m-block is left untouched.
Poly rename_vars(const Poly& p, const std::vector<int>& images);

// Replaces the variables named by `values` (slot index -> value) with
// constants, folding them into the coefficients. Slots keep their positions;
// the substituted ones simply no longer occur.
Poly substitute(const Poly& p, const std::map<int, Int>& values);

// gcd of the absolute coefficient values; 0 for the zero polynomial.
Int content(const Poly& p);
// p divided by its content; signs are preserved. Zero stays zero.
Poly primitive_part(const Poly& p);

// Canonical text: terms in graded-lex descending order, each as
// "<sign><abs>*x<i>^<e>*...*m<j>^<e>" with the coefficient always explicit
// and signed, "^1" elided, factors joined by "*", terms by a single space.
// The zero polynomial prints as "0".
std::string format_poly(const Poly& p);

// Tolerant inverse: optional "*" between factors, optional coefficient
// (implicit 1), whitespace around signs, "_" allowed before indices. A new
// term starts only at an explicit sign. When arity is omitted it is inferred
// from the largest index used (at least 2). format_poly(parse_poly(s)) == s
// for canonical s, and parse_poly(format_poly(p)) == p for all p.
Poly parse_poly(const std::string& text, std::optional<int> arity = std::nullopt);

}  // namespace gh
