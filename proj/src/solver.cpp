#include "gh/solver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace gh {

namespace {

bool contains(const std::vector<Rat>& sorted_vals, const Rat& v) {
  return std::binary_search(sorted_vals.begin(), sorted_vals.end(), v);
}

void note_level(SolveStats* stats, long ops, int depth, std::size_t n) {
  if (stats) {
    stats->max_level_ops = std::max(stats->max_level_ops, ops);
    stats->depth = std::max(stats->depth, depth + 1);
  }
  // Each level does linear work plus sorting; anything past a quadratic
  // budget means the case split degenerated into a search.
  long budget = 16 * static_cast<long>(n) * static_cast<long>(n) + 32;
  if (ops > budget) throw VerificationError("solver level exceeded its quadratic work budget");
}

// Largest length first, then the induction on one fewer blocked point.
std::vector<Rat> solve_rec(std::vector<Rat> lengths, const std::vector<Rat>& blocked_in,
                           SolveStats* stats, int depth) {
  long ops = 0;
  std::size_t n = lengths.size();
  if (n == 0) {
    note_level(stats, ops, depth, 1);
    return {};
  }
  std::sort(lengths.begin(), lengths.end());
  if (n == 1) {
    note_level(stats, ops, depth, 1);
    return {lengths[0]};
  }

  Rat s = 0;
  for (const Rat& a : lengths) {
    s += a;
    ++ops;
  }
  const Rat a1 = lengths.back();
  std::vector<Rat> rest(lengths.begin(), lengths.end() - 1);

  // Only blocked points the walk can actually land on matter.
  std::vector<Rat> M;
  for (const Rat& m : blocked_in) {
    if (m > 0 && m < s) M.push_back(m);
    ++ops;
  }
  std::sort(M.begin(), M.end());
  ops += static_cast<long>(n);

  if (M.empty() || a1 > M.back()) {
    // Every proper prefix of the descending order already clears the whole
    // blocked set.
    std::vector<Rat> order;
    order.push_back(a1);
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
      order.push_back(*it);
      ++ops;
    }
    note_level(stats, ops, depth, n);
    return order;
  }

  const Rat m1 = M.front();

  if (a1 < m1) {
    // Jump a1 first; the tail solves the shifted problem that forgets m1.
    // The full walk can then land on m1 at most once, and swapping the lead
    // jump with the jump after that landing pulls every earlier landing
    // below m1 and pushes that one past it.
    std::vector<Rat> shifted;
    for (std::size_t i = 1; i < M.size(); ++i) {
      shifted.push_back(M[i] - a1);
      ++ops;
    }
    std::vector<Rat> order;
    order.push_back(a1);
    for (Rat& v : solve_rec(std::move(rest), shifted, stats, depth + 1)) {
      order.push_back(std::move(v));
      ++ops;
    }
    Rat p = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      p += order[i];
      ++ops;
      if (p == m1) {
        std::swap(order[0], order[i + 1]);
        break;
      }
    }
    note_level(stats, ops, depth, n);
    return order;
  }

  if (a1 == m1) {
    // Jumping a1 first would land exactly on m1; solving as if it were safe
    // and then swapping the first two jumps drops the first landing below m1
    // while keeping every later landing.
    std::vector<Rat> shifted;
    for (std::size_t i = 1; i < M.size(); ++i) {
      shifted.push_back(M[i] - a1);
      ++ops;
    }
    std::vector<Rat> order;
    order.push_back(a1);
    for (Rat& v : solve_rec(std::move(rest), shifted, stats, depth + 1)) {
      order.push_back(std::move(v));
      ++ops;
    }
    if (order.size() >= 2) std::swap(order[0], order[1]);
    note_level(stats, ops, depth, n);
    return order;
  }

  if (contains(M, a1)) {
    // a1 sits on a blocked point other than the smallest. Lead with the
    // smallest helper jump g whose landing and whose follow-up landing g+a1
    // are both clear, then a1, then the doubly shifted subproblem. Among the
    // n-1 candidates at most n-3 are excluded, so g exists.
    const Rat* g = nullptr;
    for (const Rat& x : rest) {
      ++ops;
      if (!contains(M, x) && !contains(M, x + a1)) {
        g = &x;
        break;
      }
    }
    if (!g) throw VerificationError("no safe helper jump exists for a blocked largest length");
    const Rat base = *g + a1;
    std::vector<Rat> sub_lengths;
    for (const Rat& x : rest) {
      if (x != *g) sub_lengths.push_back(x);
      ++ops;
    }
    std::vector<Rat> shifted;
    for (const Rat& m : M) {
      shifted.push_back(m - base);
      ++ops;
    }
    std::vector<Rat> order;
    order.push_back(*g);
    order.push_back(a1);
    for (Rat& v : solve_rec(std::move(sub_lengths), shifted, stats, depth + 1)) {
      order.push_back(std::move(v));
      ++ops;
    }
    note_level(stats, ops, depth, n);
    return order;
  }

  // a1 lands strictly between blocked points: its landing is clear, every
  // later landing clears the points below it, and at least one blocked point
  // drops out of the shifted subproblem.
  std::vector<Rat> shifted;
  for (const Rat& m : M) {
    if (m > a1) shifted.push_back(m - a1);
    ++ops;
  }
  std::vector<Rat> order;
  order.push_back(a1);
  for (Rat& v : solve_rec(std::move(rest), shifted, stats, depth + 1)) {
    order.push_back(std::move(v));
    ++ops;
  }
  note_level(stats, ops, depth, n);
  return order;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(parse_rat(piece));
  return out;
}

}  // namespace

Instance validate(const std::vector<Rat>& lengths, const std::vector<Rat>& blocked) {
  if (lengths.empty())
    throw InstanceError(InstanceErrorCode::wrong_blocked_size, "at least one jump length is required");
  for (const Rat& a : lengths)
    if (a <= 0)
      throw InstanceError(InstanceErrorCode::nonpositive_value,
                          "jump length " + format_rat(a) + " is not positive");
  for (const Rat& m : blocked)
    if (m <= 0)
      throw InstanceError(InstanceErrorCode::nonpositive_value,
                          "blocked point " + format_rat(m) + " is not positive");
  std::vector<Rat> sorted_lengths = lengths;
  std::sort(sorted_lengths.begin(), sorted_lengths.end());
  for (std::size_t i = 0; i + 1 < sorted_lengths.size(); ++i)
    if (sorted_lengths[i] == sorted_lengths[i + 1])
      throw InstanceError(InstanceErrorCode::duplicate_length,
                          "jump length " + format_rat(sorted_lengths[i]) + " repeats");
  std::vector<Rat> sorted_blocked = blocked;
  std::sort(sorted_blocked.begin(), sorted_blocked.end());
  for (std::size_t i = 0; i + 1 < sorted_blocked.size(); ++i)
    if (sorted_blocked[i] == sorted_blocked[i + 1])
      throw InstanceError(InstanceErrorCode::duplicate_blocked,
                          "blocked point " + format_rat(sorted_blocked[i]) + " repeats");
  if (blocked.size() != lengths.size() - 1)
    throw InstanceError(InstanceErrorCode::wrong_blocked_size,
                        "expected " + std::to_string(lengths.size() - 1) + " blocked points, got " +
                            std::to_string(blocked.size()));
  Rat total = 0;
  for (const Rat& a : lengths) total += a;
  if (std::binary_search(sorted_blocked.begin(), sorted_blocked.end(), total))
    throw InstanceError(InstanceErrorCode::sum_in_blocked,
                        "the total jump sum " + format_rat(total) + " is a blocked point");
  return Instance{lengths, std::move(sorted_blocked), std::move(total)};
}

bool safe_order(const std::vector<Rat>& order, const std::vector<Rat>& blocked) {
  std::vector<Rat> M = blocked;
  std::sort(M.begin(), M.end());
  Rat p = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    p += order[i];
    if (std::binary_search(M.begin(), M.end(), p)) return false;
  }
  return true;
}

bool verify_order(const Instance& inst, const std::vector<Rat>& order) {
  std::vector<Rat> a = inst.lengths;
  std::vector<Rat> b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw UsageError("order is not a rearrangement of the instance lengths");
  return safe_order(order, inst.blocked);
}

std::vector<Rat> solve_sequence(std::vector<Rat> lengths, std::vector<Rat> blocked,
                                SolveStats* stats) {
  return solve_rec(std::move(lengths), blocked, stats, 0);
}

std::vector<Rat> solve(const Instance& inst, SolveStats* stats) {
  std::vector<Rat> order = solve_rec(inst.lengths, inst.blocked, stats, 0);
  std::vector<Rat> a = inst.lengths;
  std::vector<Rat> b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw VerificationError("solver dropped or invented a jump length");
  if (!safe_order(order, inst.blocked)) throw VerificationError("solver produced an unsafe order");
  return order;
}

Instance parse_instance_text(const std::string& text) {
  std::vector<Rat> lengths;
  std::vector<Rat> blocked;
  bool saw_lengths = false;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t colon = t.find(':');
    if (colon == std::string::npos) throw UsageError("instance line has no key: " + t);
    std::string key = trim(t.substr(0, colon));
    std::string rest = t.substr(colon + 1);
    if (key == "lengths") {
      if (saw_lengths) throw UsageError("duplicate lengths line");
      lengths = parse_rat_list(rest);
      saw_lengths = true;
    } else if (key == "blocked") {
      blocked = parse_rat_list(rest);
    } else {
      throw UsageError("unknown instance key: " + key);
    }
  }
  if (!saw_lengths) throw UsageError("instance has no lengths line");
  return validate(lengths, blocked);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string write_instance_text(const Instance& inst) {
  std::string out = "lengths:";
  for (std::size_t i = 0; i < inst.lengths.size(); ++i)
    out += (i ? ", " : " ") + format_rat(inst.lengths[i]);
  out += "\nblocked:";
  for (std::size_t i = 0; i < inst.blocked.size(); ++i)
    out += (i ? ", " : " ") + format_rat(inst.blocked[i]);
  out += "\n";
  return out;
}

}  // namespace gh
