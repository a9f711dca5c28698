#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gh/numbers.hpp"

namespace gh {

// The ten coincidence events among prefix sums of an increasing quadruple
// 0 < a1 < a2 < a3 < a4. The pairs (A1,A2), (B1,B2), (C1,C2), (D1,D2) have
// defining equations that cancel to the same linear form, so each pair is
// logically a single event with two spellings.
enum class EventCode { A1, A2, B1, B2, C1, C2, D1, D2, E, F };

inline constexpr int kEventCount = 10;

// Events listed in canonical code order, deduplicated.
using EventSet = std::vector<EventCode>;

std::string event_name(EventCode c);
std::optional<EventCode> event_from_name(const std::string& name);

// Coefficients of the defining equation over (a1,a2,a3,a4), as form = 0.
std::array<int, 4> event_form(EventCode c);

// The two prefix-sum expressions whose equality defines the event, e.g.
// A2 -> ("a1+a2+a4", "a3+a4").
std::pair<std::string, std::string> event_expressions(EventCode c);

// Adds the partner spelling of every present event and sorts canonically.
EventSet close_events(EventSet events);

std::string format_event_set(const EventSet& events);  // "(A1,A2,E)", "()" when empty

// Linear constraints over (a1,a2,a3,a4) with integer-free rational
// coefficients; each row r means r.a1*a1+...+r.a4*a4 REL 0. The strict
// ordering 0 < a1 < a2 < a3 < a4 is always part of the system.
using LinForm = std::array<Rat, 4>;

struct LinearSystem {
  std::vector<LinForm> equalities;      // = 0
  std::vector<LinForm> strict_gts;      // > 0
  std::vector<LinForm> disequalities;   // != 0, branched into < and >
};

// Exact Fourier-Motzkin elimination; a returned point satisfies every
// constraint (and the ordering) by direct substitution.
std::optional<std::array<Rat, 4>> feasible(const LinearSystem& sys);

// Events whose defining equation vanishes at a. Requires 0<a1<a2<a3<a4.
EventSet detect_events(const std::array<Rat, 4>& a);

enum class PairClass { always, sometimes, never };
std::string pair_class_name(PairClass c);

// never: the two events cannot hold together. always: under the ordering
// each implies the other. sometimes: both remaining cases are realizable.
PairClass classify_pair(EventCode p, EventCode q);

// Comparison of the computed 45 unordered classifications against the
// archived published matrix.
struct Table2Report {
  bool all_match = false;
  bool symmetric = false;              // computed matrix symmetry
  int mismatches = 0;
  std::vector<std::string> lines;      // "TABLE2 <p> <q> computed=<c> paper=<c'> MATCH|MISMATCH"
};

Table2Report verify_table2();

// Archived published compatibility matrix, 10 rows of 10 symbols:
// 'o' always, '^' sometimes, 'x' never, '-' diagonal.
std::array<std::string, 10> published_table2_matrix();

// A realizable combination of events: the events in `codes` hold, all
// others fail, the ordering is strict. The witness satisfies all of that by
// substitution.
struct Combo {
  EventSet codes;
  std::array<Rat, 4> witness;
};

// All realizable combinations, in increasing bitmask order over the six
// effective event classes (A,B,C,D,E,F). Every witness is re-verified.
std::vector<Combo> enumerate_feasible_combos();

// The nine combinations of the published case list.
std::vector<EventSet> published_combos();

// A proper-prefix landing point as a 0/1 mask over (a1,a2,a3,a4).
using PointVec = std::array<int, 4>;

std::string point_name(const PointVec& v);  // "a1+a2+a4"

// The 14 possible landing expressions: singles, pairs, triples, each group
// in lexicographic index order.
std::vector<PointVec> point_expressions();

// The 24 landing-point triples of the orders of (a1,a2,a3,a4), one row per
// permutation in lexicographic order, together with a partition of the 14
// expressions into value classes under an event set: two expressions share
// a class iff their difference is a rational combination of the event
// equations, and any two distinct classes are provably unequal under the
// full event system (equality infeasible).
struct RecordTable {
  EventSet events;
  std::vector<std::array<PointVec, 3>> rows;     // 24 rows
  std::vector<std::vector<PointVec>> classes;    // partition of the 14 points
};

// The bare table: no events, every expression its own class.
RecordTable records();

// The table under an event set (closed over partner spellings first).
// UsageError when the event set is not realizable.
RecordTable relabel(const EventSet& events);

// Rows rewritten as class ids, renumbered by first occurrence; two tables
// agree up to class renaming iff their patterns are equal.
std::vector<std::array<int, 3>> class_pattern(const RecordTable& table);

// First-occurrence renumbering of arbitrary label rows, for comparing
// archived tables against computed patterns.
std::vector<std::array<int, 3>> pattern_from_rows(
    const std::vector<std::array<std::string, 3>>& rows);

// Archived published row fixtures. The third entry of row 18 of the record
// table reads "a3+a3+a4" in the source, which is not a landing expression;
// canonical generation yields "a2+a3+a4" there.
std::vector<std::array<std::string, 3>> published_table3_rows();
std::vector<std::array<std::string, 3>> published_table4_rows();

// All unordered pairs of landing expressions whose equality is realizable
// under the ordering alone. Exactly ten, and each difference cancels to one
// of the six event forms; anything else is a defect.
std::vector<std::pair<PointVec, PointVec>> undetermined_pairs();

// Exhaustive search for <= 3 value classes that together touch all 24 rows.
// An empty result means no choice of three blocked points can stop every
// order under this event combination.
struct CoverReport {
  bool found = false;
  std::vector<int> cover;   // class indices when found
  std::string line;         // "COMBO <set> cover=NONE|<classes>"
};

CoverReport blocking_cover_search(const EventSet& events);

}  // namespace gh
