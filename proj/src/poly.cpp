#include "gh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gh {

uint64_t mono_degree(const Mono& m) {
  uint64_t d = 0;
  for (uint32_t e : m) d += e;
  return d;
}

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
  uint64_t da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(int arity) : n_(arity) {
  if (arity < 1) throw UsageError("polynomial arity must be at least 1");
}

void Poly::add_term(const Mono& mono, const Int& c) {
  if (c == 0) return;
  if (static_cast<int>(mono.size()) != slots())
    throw UsageError("monomial length does not match variable count");
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::constant(int arity, const Int& c) {
  Poly p(arity);
  p.add_term(Mono(p.slots(), 0), c);
  return p;
}

Poly Poly::x(int arity, int i) {
  Poly p(arity);
  if (i < 1 || i > arity) throw UsageError("x index out of range");
  Mono mo(p.slots(), 0);
  mo[i - 1] = 1;
  p.add_term(mo, 1);
  return p;
}

Poly Poly::m(int arity, int j) {
  Poly p(arity);
  if (j < 1 || j > arity - 1) throw UsageError("m index out of range");
  Mono mo(p.slots(), 0);
  mo[arity + j - 1] = 1;
  p.add_term(mo, 1);
  return p;
}

static void require_same_space(const Poly& a, const Poly& b) {
  if (a.arity() != b.arity())
    throw UsageError("operands live over different variable sets");
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_space(a, b);
  Poly r = a;
  for (const auto& [mo, c] : b.terms()) r.add_term(mo, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_space(a, b);
  Poly r = a;
  for (const auto& [mo, c] : b.terms()) r.add_term(mo, -c);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r(a.arity());
  for (const auto& [mo, c] : a.terms()) r.add_term(mo, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_space(a, b);
  const Poly& outer = a.term_count() <= b.term_count() ? a : b;
  const Poly& inner = a.term_count() <= b.term_count() ? b : a;
  Poly r(a.arity());
  Mono key(a.slots());
  for (const auto& [ma, ca] : outer.terms()) {
    for (const auto& [mb, cb] : inner.terms()) {
      for (int i = 0; i < a.slots(); ++i) key[i] = ma[i] + mb[i];
      r.add_term(key, ca * cb);
    }
  }
  return r;
}

Poly operator*(const Int& c, const Poly& a) {
  Poly r(a.arity());
  for (const auto& [mo, co] : a.terms()) r.add_term(mo, c * co);
  return r;
}

uint64_t total_degree(const Poly& p) {
  if (p.is_zero()) return 0;
  // Leading term has maximal degree by the graded order.
  return mono_degree(p.terms().rbegin()->first);
}

std::optional<Poly> try_exact_divide(const Poly& p, const Poly& d) {
  require_same_space(p, d);
  if (d.is_zero()) throw UsageError("division by the zero polynomial");
  Poly q(p.arity());
  Poly r = p;
  const auto& dlead = *d.terms().rbegin();
  const Mono& dm = dlead.first;
  const Int& dc = dlead.second;
  Mono mu(p.slots());
  Mono key(p.slots());
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    const Mono& rm = rlead.first;
    for (int i = 0; i < p.slots(); ++i) {
      if (rm[i] < dm[i]) return std::nullopt;
      mu[i] = rm[i] - dm[i];
    }
    if (rlead.second % dc != 0) return std::nullopt;
    Int c = rlead.second / dc;
    q.add_term(mu, c);
    for (const auto& [mo, co] : d.terms()) {
      for (int i = 0; i < p.slots(); ++i) key[i] = mu[i] + mo[i];
      r.add_term(key, -c * co);
    }
  }
  return q;
}

Rat evaluate(const Poly& p, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != p.slots())
    throw UsageError("evaluation point length does not match variable count");
  // Per-variable power cache; exponents in practice stay small.
  std::vector<std::vector<Rat>> pows(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) pows[v].push_back(Rat(1));
  auto power = [&](std::size_t v, uint32_t e) -> const Rat& {
    auto& col = pows[v];
    while (col.size() <= e) col.push_back(col.back() * point[v]);
    return col[e];
  };
  Rat acc(0);
  for (const auto& [mo, c] : p.terms()) {
    Rat t(c);
    for (std::size_t v = 0; v < mo.size(); ++v)
      if (mo[v] != 0) t *= power(v, mo[v]);
    acc += t;
  }
  return acc;
}

Int coefficient_of(const Poly& p, const Mono& mono) {
  if (static_cast<int>(mono.size()) != p.slots())
    throw UsageError("monomial length does not match variable count");
  auto it = p.terms().find(mono);
  return it == p.terms().end() ? Int(0) : it->second;
}

Poly rename_vars(const Poly& p, const std::vector<int>& images) {
  int n = p.arity();
  if (static_cast<int>(images.size()) != n)
    throw UsageError("permutation image list has wrong length");
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1])
      throw UsageError("images do not form a bijection of {1..n}");
    seen[v - 1] = true;
  }
  Poly r(n);
  Mono key(p.slots());
  for (const auto& [mo, c] : p.terms()) {
    std::fill(key.begin(), key.end(), 0);
    for (int i = 0; i < n; ++i) key[images[i] - 1] = mo[i];
    for (int i = n; i < p.slots(); ++i) key[i] = mo[i];
    r.add_term(key, c);
  }
  return r;
}

Poly substitute(const Poly& p, const std::map<int, Int>& values) {
  for (const auto& [slot, v] : values) {
    (void)v;
    if (slot < 0 || slot >= p.slots()) throw UsageError("substituted slot out of range");
  }
  Poly r(p.arity());
  Mono key(p.slots());
  for (const auto& [mo, c] : p.terms()) {
    key = mo;
    Int coef = c;
    for (const auto& [slot, v] : values) {
      for (uint32_t e = 0; e < mo[slot]; ++e) coef *= v;
      key[slot] = 0;
    }
    r.add_term(key, coef);
  }
  return r;
}

Int content(const Poly& p) {
  Int g = 0;
  for (const auto& [mo, c] : p.terms()) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g == 1) break;
  }
  return g;
}

Poly primitive_part(const Poly& p) {
  Int g = content(p);
  if (g <= 1) return p;
  Poly r(p.arity());
  for (const auto& [mo, c] : p.terms()) r.add_term(mo, c / g);
  return r;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  int n = p.arity();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mo, c] = *it;
    if (!first) out << ' ';
    first = false;
    Int mag = c < 0 ? Int(-c) : c;
    out << (c < 0 ? '-' : '+') << mag.str();
    for (int i = 0; i < p.slots(); ++i) {
      if (mo[i] == 0) continue;
      out << '*' << (i < n ? 'x' : 'm') << (i < n ? i + 1 : i - n + 1);
      if (mo[i] > 1) out << '^' << mo[i];
    }
  }
  return out.str();
}

namespace {

struct RawTerm {
  Int coeff;
  std::vector<std::pair<char, std::pair<int, uint32_t>>> factors;  // (kind, (index, exp))
};

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  std::vector<RawTerm> run() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial text");
    while (pos_ < s_.size()) {
      terms.push_back(term(terms.empty()));
      skip_ws();
    }
    return terms;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  uint64_t digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected digits");
    if (pos_ - start > 9) throw ParseError(start, "index or exponent too large");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  Int integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected digits");
    return Int(s_.substr(start, pos_ - start));
  }

  RawTerm term(bool is_first) {
    RawTerm t;
    t.coeff = 1;
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      if (s_[pos_] == '-') t.coeff = -1;
      ++pos_;
      skip_ws();
    } else if (!is_first) {
      throw ParseError(pos_, "expected '+' or '-' between terms");
    }
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= integer();
      saw_factor = true;
    }
    for (;;) {
      std::size_t before = pos_;
      skip_ws();
      bool starred = false;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        starred = true;
      }
      if (peek() == 'x' || peek() == 'm') {
        char kind = s_[pos_++];
        if (peek() == '_') ++pos_;
        std::size_t idx_pos = pos_;
        int idx = static_cast<int>(digits());
        if (idx < 1) throw ParseError(idx_pos, "variable index must be positive");
        uint32_t exp = 1;
        if (peek() == '^') {
          ++pos_;
          exp = static_cast<uint32_t>(digits());
        }
        t.factors.push_back({kind, {idx, exp}});
        saw_factor = true;
      } else if (starred) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          t.coeff *= integer();
        } else {
          throw ParseError(pos_, "expected a factor after '*'");
        }
      } else {
        pos_ = before;  // not part of this term
        break;
      }
    }
    if (!saw_factor) throw ParseError(pos_, "expected a coefficient or variable");
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, std::optional<int> arity) {
  std::vector<RawTerm> raw = PolyParser(text).run();
  int max_x = 0, max_m = 0;
  for (const auto& t : raw) {
    for (const auto& [kind, iv] : t.factors) {
      if (kind == 'x') max_x = std::max(max_x, iv.first);
      else max_m = std::max(max_m, iv.first);
    }
  }
  int n = arity.value_or(std::max({2, max_x, max_m + 1}));
  if (max_x > n || max_m > n - 1)
    throw UsageError("variable index exceeds the requested arity");
  Poly p(n);
  Mono key(p.slots());
  for (const auto& t : raw) {
    std::fill(key.begin(), key.end(), 0);
    for (const auto& [kind, iv] : t.factors) {
      int slot = kind == 'x' ? iv.first - 1 : n + iv.first - 1;
      key[slot] += iv.second;
    }
    p.add_term(key, t.coeff);
  }
  return p;
}

}  // namespace gh
