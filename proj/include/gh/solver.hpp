#pragma once

#include <string>
#include <vector>

#include "gh/numbers.hpp"

namespace gh {

// A jump-ordering problem: n pairwise-distinct positive lengths and n-1
// pairwise-distinct positive blocked points, with the total jump sum s kept
// out of the blocked set. blocked is stored sorted ascending.
struct Instance {
  std::vector<Rat> lengths;
  std::vector<Rat> blocked;
  Rat total;  // sum of lengths
};

enum class InstanceErrorCode {
  nonpositive_value,
  duplicate_length,
  duplicate_blocked,
  wrong_blocked_size,
  sum_in_blocked,
};

struct InstanceError : UsageError {
  InstanceErrorCode code;
  InstanceError(InstanceErrorCode c, const std::string& msg) : UsageError(msg), code(c) {}
};

// Canonical Instance or InstanceError with the specific rejection code.
Instance validate(const std::vector<Rat>& lengths, const std::vector<Rat>& blocked);

// True iff no proper prefix sum of order lands on a blocked point. order must
// be a permutation (as a multiset) of the instance lengths.
bool verify_order(const Instance& inst, const std::vector<Rat>& order);

// Per-recursion-level work counters; max_level_ops stays within a fixed
// multiple of n^2 (no hidden brute force over orders).
struct SolveStats {
  long max_level_ops = 0;
  int depth = 0;
};

// A safe jump order, built by the inductive case split on the largest length
// against the smallest/largest blocked point: jump it first when it clears
// the smallest blocked point fails to interfere (with a single swap repair
// when the tail walk lands on that point), swap the first two jumps when it
// equals the smallest, recurse on the shifted blocked set when it sits
// between blocked points, emit descending order when it clears everything,
// and lead with a helper jump when the largest length is itself blocked.
// The returned order is safety-checked before being returned; a failure
// throws VerificationError.
std::vector<Rat> solve(const Instance& inst, SolveStats* stats = nullptr);

// Recursion core on raw sequences. Blocked points outside the open interval
// (0, sum) are ignored, and after that filter at most n-1 may remain. Used
// directly by tests for degenerate inputs the Instance type rejects.
std::vector<Rat> solve_sequence(std::vector<Rat> lengths, std::vector<Rat> blocked,
                                SolveStats* stats = nullptr);

// True iff no proper prefix of order hits a blocked point (raw form).
bool safe_order(const std::vector<Rat>& order, const std::vector<Rat>& blocked);

// Instance file format: one "lengths:" line and one "blocked:" line, comma
// separated rationals ("p/q" or integers). Blank lines ignored.
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);
std::string write_instance_text(const Instance& inst);

}  // namespace gh
