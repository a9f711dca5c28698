#include "gh/cases.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gh {

namespace {

const char* const kCodeNames[kEventCount] = {"A1", "A2", "B1", "B2", "C1",
                                             "C2", "D1", "D2", "E",  "F"};

// Defining linear form of each code over (a1,a2,a3,a4); the event is form=0.
const std::array<int, 4> kCodeForms[kEventCount] = {
    {1, 1, -1, 0}, {1, 1, -1, 0}, {1, 1, 0, -1}, {1, 1, 0, -1}, {1, 0, 1, -1},
    {1, 0, 1, -1}, {0, 1, 1, -1}, {0, 1, 1, -1}, {1, -1, -1, 1}, {1, 1, 1, -1}};

// The two landing expressions whose equality spells the event.
const std::array<PointVec, 2> kCodeExpressions[kEventCount] = {
    {{{1, 1, 0, 0}, {0, 0, 1, 0}}},  // A1: a1+a2 = a3
    {{{1, 1, 0, 1}, {0, 0, 1, 1}}},  // A2: a1+a2+a4 = a3+a4
    {{{1, 1, 0, 0}, {0, 0, 0, 1}}},  // B1: a1+a2 = a4
    {{{1, 1, 1, 0}, {0, 0, 1, 1}}},  // B2: a1+a2+a3 = a3+a4
    {{{1, 0, 1, 0}, {0, 0, 0, 1}}},  // C1: a1+a3 = a4
    {{{1, 1, 1, 0}, {0, 1, 0, 1}}},  // C2: a1+a2+a3 = a2+a4
    {{{0, 1, 1, 0}, {0, 0, 0, 1}}},  // D1: a2+a3 = a4
    {{{1, 1, 1, 0}, {1, 0, 0, 1}}},  // D2: a1+a2+a3 = a1+a4
    {{{1, 0, 0, 1}, {0, 1, 1, 0}}},  // E:  a1+a4 = a2+a3
    {{{1, 1, 1, 0}, {0, 0, 0, 1}}},  // F:  a1+a2+a3 = a4
};

// The six effective classes once equivalent spellings are merged.
constexpr int kClassCount = 6;
const int kClassOfCode[kEventCount] = {0, 0, 1, 1, 2, 2, 3, 3, 4, 5};
const std::array<int, 4> kClassForms[kClassCount] = {{1, 1, -1, 0}, {1, 1, 0, -1},
                                                     {1, 0, 1, -1}, {0, 1, 1, -1},
                                                     {1, -1, -1, 1}, {1, 1, 1, -1}};
const std::vector<EventCode> kClassCodes[kClassCount] = {
    {EventCode::A1, EventCode::A2}, {EventCode::B1, EventCode::B2},
    {EventCode::C1, EventCode::C2}, {EventCode::D1, EventCode::D2},
    {EventCode::E},                 {EventCode::F}};

using Row = std::array<Rat, 4>;

Row to_row(const std::array<int, 4>& f) {
  return Row{Rat(f[0]), Rat(f[1]), Rat(f[2]), Rat(f[3])};
}

bool all_zero(const Row& r) {
  for (const Rat& c : r)
    if (c != 0) return false;
  return true;
}

struct ElimStep {
  int var = 0;
  bool is_eq = false;
  Row pivot{};
  std::vector<Row> lows, ups;
};

// Exact homogeneous Fourier-Motzkin over (a1..a4). Every derived row is a
// consequence of the inputs, so a surviving variable-free strict row reads
// 0 > 0 and proves infeasibility; otherwise back-substitution in reverse
// elimination order always lands inside a nonempty interval.
std::optional<std::array<Rat, 4>> fm_feasible(std::vector<Row> eqs, std::vector<Row> gts) {
  std::vector<ElimStep> steps;
  for (int v = 3; v >= 0; --v) {
    auto piv_it = std::find_if(eqs.begin(), eqs.end(), [&](const Row& e) { return e[v] != 0; });
    if (piv_it != eqs.end()) {
      Row piv = *piv_it;
      eqs.erase(piv_it);
      auto subst = [&](Row c) {
        if (c[v] == 0) return c;
        Rat k = c[v] / piv[v];
        for (int i = 0; i < 4; ++i) c[i] -= k * piv[i];
        return c;
      };
      for (Row& e : eqs) e = subst(e);
      for (Row& g : gts) g = subst(g);
      ElimStep st;
      st.var = v;
      st.is_eq = true;
      st.pivot = piv;
      steps.push_back(std::move(st));
      continue;
    }
    std::vector<Row> lows, ups, next;
    for (Row& g : gts) {
      if (g[v] > 0)
        lows.push_back(g);
      else if (g[v] < 0)
        ups.push_back(g);
      else
        next.push_back(g);
    }
    for (const Row& lo : lows)
      for (const Row& up : ups) {
        Row comb;
        for (int i = 0; i < 4; ++i) comb[i] = lo[i] * (-up[v]) + up[i] * lo[v];
        next.push_back(comb);
      }
    gts = std::move(next);
    ElimStep st;
    st.var = v;
    st.is_eq = false;
    st.lows = std::move(lows);
    st.ups = std::move(ups);
    steps.push_back(std::move(st));
  }
  for (const Row& e : eqs)
    if (!all_zero(e)) throw VerificationError("elimination left an equality with variables");
  if (!gts.empty()) {
    for (const Row& g : gts)
      if (!all_zero(g)) throw VerificationError("elimination left an inequality with variables");
    return std::nullopt;
  }
  std::array<Rat, 4> val{};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    int v = it->var;
    auto ev = [&](const Row& c) {
      Rat s = 0;
      for (int i = 0; i < 4; ++i)
        if (i != v && c[i] != 0) s += c[i] * val[i];
      return s;
    };
    if (it->is_eq) {
      val[v] = -ev(it->pivot) / it->pivot[v];
    } else {
      std::optional<Rat> lo, hi;
      for (const Row& c : it->lows) {
        Rat b = -ev(c) / c[v];
        if (!lo || b > *lo) lo = b;
      }
      for (const Row& c : it->ups) {
        Rat b = -ev(c) / c[v];
        if (!hi || b < *hi) hi = b;
      }
      if (!lo && !hi)
        val[v] = 1;
      else if (!hi)
        val[v] = *lo + 1;
      else if (!lo)
        val[v] = *hi - 1;
      else if (*lo < *hi)
        val[v] = (*lo + *hi) / 2;
      else
        throw VerificationError("empty interval during back-substitution");
    }
  }
  return val;
}

const std::vector<Row>& ordering_rows() {
  static const std::vector<Row> rows = {to_row({1, 0, 0, 0}), to_row({-1, 1, 0, 0}),
                                        to_row({0, -1, 1, 0}), to_row({0, 0, -1, 1})};
  return rows;
}

// Disequalities branch into < and >; positive branch explored first so the
// returned witness is deterministic.
std::optional<std::array<Rat, 4>> branch_neqs(const std::vector<Row>& eqs, std::vector<Row>& gts,
                                              const std::vector<Row>& neqs, std::size_t i) {
  if (i == neqs.size()) return fm_feasible(eqs, gts);
  gts.push_back(neqs[i]);
  if (auto w = branch_neqs(eqs, gts, neqs, i + 1)) {
    gts.pop_back();
    return w;
  }
  for (int k = 0; k < 4; ++k) gts.back()[k] = -neqs[i][k];
  auto w = branch_neqs(eqs, gts, neqs, i + 1);
  gts.pop_back();
  return w;
}

std::optional<std::array<Rat, 4>> feasible_parts(const std::vector<Row>& eqs,
                                                 const std::vector<Row>& neqs,
                                                 const std::vector<Row>& extra_gts = {}) {
  std::vector<Row> gts = ordering_rows();
  gts.insert(gts.end(), extra_gts.begin(), extra_gts.end());
  return branch_neqs(eqs, gts, neqs, 0);
}

Rat apply_form(const Row& f, const std::array<Rat, 4>& a) {
  Rat s = 0;
  for (int i = 0; i < 4; ++i) s += f[i] * a[i];
  return s;
}

// Is target in the rational span of vectors? Gaussian elimination by column.
bool span_solve(const std::vector<Row>& vectors, const Row& target) {
  std::vector<Row> rows = vectors;
  std::vector<bool> used(rows.size(), false);
  Row t = target;
  for (int col = 0; col < 4; ++col) {
    int r = -1;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!used[i] && rows[i][col] != 0) {
        r = static_cast<int>(i);
        break;
      }
    if (r < 0) continue;
    used[r] = true;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != r && rows[i][col] != 0) {
        Rat k = rows[i][col] / rows[r][col];
        for (int j = 0; j < 4; ++j) rows[i][j] -= k * rows[r][j];
      }
    if (t[col] != 0) {
      Rat k = t[col] / rows[r][col];
      for (int j = 0; j < 4; ++j) t[j] -= k * rows[r][j];
    }
  }
  return all_zero(t);
}

Row point_diff(const PointVec& u, const PointVec& v) {
  Row d;
  for (int i = 0; i < 4; ++i) d[i] = Rat(u[i] - v[i]);
  return d;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

const std::vector<std::array<PointVec, 3>>& record_rows() {
  static const std::vector<std::array<PointVec, 3>> rows = [] {
    std::vector<std::array<PointVec, 3>> out;
    std::array<int, 4> p = {0, 1, 2, 3};
    do {
      std::array<PointVec, 3> row{};
      PointVec pref = {0, 0, 0, 0};
      for (int i = 0; i < 3; ++i) {
        pref[p[i]] = 1;
        row[i] = pref;
      }
      out.push_back(row);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return rows;
}

}  // namespace

std::string event_name(EventCode c) { return kCodeNames[static_cast<int>(c)]; }

std::optional<EventCode> event_from_name(const std::string& name) {
  for (int i = 0; i < kEventCount; ++i)
    if (name == kCodeNames[i]) return static_cast<EventCode>(i);
  return std::nullopt;
}

std::array<int, 4> event_form(EventCode c) { return kCodeForms[static_cast<int>(c)]; }

std::pair<std::string, std::string> event_expressions(EventCode c) {
  const auto& e = kCodeExpressions[static_cast<int>(c)];
  return {point_name(e[0]), point_name(e[1])};
}

EventSet close_events(EventSet events) {
  bool present[kEventCount] = {};
  for (EventCode c : events) present[static_cast<int>(c)] = true;
  for (int cl = 0; cl < kClassCount; ++cl) {
    bool any = false;
    for (EventCode c : kClassCodes[cl]) any = any || present[static_cast<int>(c)];
    if (any)
      for (EventCode c : kClassCodes[cl]) present[static_cast<int>(c)] = true;
  }
  EventSet out;
  for (int i = 0; i < kEventCount; ++i)
    if (present[i]) out.push_back(static_cast<EventCode>(i));
  return out;
}

std::string format_event_set(const EventSet& events) {
  std::vector<std::string> names;
  for (EventCode c : events) names.push_back(event_name(c));
  return "(" + join(names, ",") + ")";
}

std::optional<std::array<Rat, 4>> feasible(const LinearSystem& sys) {
  std::vector<Row> eqs(sys.equalities.begin(), sys.equalities.end());
  std::vector<Row> neqs(sys.disequalities.begin(), sys.disequalities.end());
  std::vector<Row> extra(sys.strict_gts.begin(), sys.strict_gts.end());
  return feasible_parts(eqs, neqs, extra);
}

EventSet detect_events(const std::array<Rat, 4>& a) {
  if (!(0 < a[0] && a[0] < a[1] && a[1] < a[2] && a[2] < a[3]))
    throw UsageError("lengths must satisfy 0 < a1 < a2 < a3 < a4");
  EventSet out;
  for (int i = 0; i < kEventCount; ++i)
    if (apply_form(to_row(kCodeForms[i]), a) == 0) out.push_back(static_cast<EventCode>(i));
  return out;
}

std::string pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::always: return "always";
    case PairClass::sometimes: return "sometimes";
    case PairClass::never: return "never";
  }
  throw UsageError("bad pair class");
}

PairClass classify_pair(EventCode p, EventCode q) {
  if (p == q) throw UsageError("classify_pair needs two distinct events");
  Row fp = to_row(event_form(p));
  Row fq = to_row(event_form(q));
  if (!feasible_parts({fp, fq}, {})) return PairClass::never;
  bool p_forces_q = !feasible_parts({fp}, {fq});
  bool q_forces_p = !feasible_parts({fq}, {fp});
  if (p_forces_q && q_forces_p) return PairClass::always;
  return PairClass::sometimes;
}

std::array<std::string, 10> published_table2_matrix() {
  return {"-oxx^^^^^^", "o-xx^^^^^^", "xx-oxxxx^x", "xxo-xxxx^x", "^^xx-oxx^x",
          "^^xxo-xx^x", "^^xxxx-oxx", "^^xxxxo-xx", "^^^^^^xx-x", "^^xxxxxxx-"};
}

Table2Report verify_table2() {
  auto word_of_symbol = [](char s) -> std::string {
    switch (s) {
      case 'o': return "always";
      case '^': return "sometimes";
      case 'x': return "never";
    }
    throw VerificationError("bad archived matrix symbol");
  };
  PairClass computed[kEventCount][kEventCount];
  for (int i = 0; i < kEventCount; ++i)
    for (int j = 0; j < kEventCount; ++j)
      if (i != j)
        computed[i][j] =
            classify_pair(static_cast<EventCode>(i), static_cast<EventCode>(j));
  Table2Report rep;
  rep.symmetric = true;
  for (int i = 0; i < kEventCount; ++i)
    for (int j = i + 1; j < kEventCount; ++j)
      if (computed[i][j] != computed[j][i]) rep.symmetric = false;
  auto pub = published_table2_matrix();
  rep.all_match = true;
  for (int i = 0; i < kEventCount; ++i)
    for (int j = i + 1; j < kEventCount; ++j) {
      std::string got = pair_class_name(computed[i][j]);
      std::string want = word_of_symbol(pub[i][j]);
      bool match = got == want;
      if (!match) {
        rep.all_match = false;
        ++rep.mismatches;
      }
      rep.lines.push_back("TABLE2 " + std::string(kCodeNames[i]) + " " + kCodeNames[j] +
                          " computed=" + got + " paper=" + want +
                          (match ? " MATCH" : " MISMATCH"));
    }
  return rep;
}

std::vector<Combo> enumerate_feasible_combos() {
  std::vector<Combo> out;
  for (int mask = 0; mask < (1 << kClassCount); ++mask) {
    std::vector<Row> eqs, neqs;
    for (int cl = 0; cl < kClassCount; ++cl)
      (mask >> cl & 1 ? eqs : neqs).push_back(to_row(kClassForms[cl]));
    auto w = feasible_parts(eqs, neqs);
    if (!w) continue;
    const std::array<Rat, 4>& a = *w;
    if (!(0 < a[0] && a[0] < a[1] && a[1] < a[2] && a[2] < a[3]))
      throw VerificationError("witness violates the ordering");
    for (const Row& f : eqs)
      if (apply_form(f, a) != 0) throw VerificationError("witness misses a required event");
    for (const Row& f : neqs)
      if (apply_form(f, a) == 0) throw VerificationError("witness hits an excluded event");
    Combo combo;
    combo.witness = a;
    for (int cl = 0; cl < kClassCount; ++cl)
      if (mask >> cl & 1)
        for (EventCode c : kClassCodes[cl]) combo.codes.push_back(c);
    std::sort(combo.codes.begin(), combo.codes.end());
    out.push_back(std::move(combo));
  }
  return out;
}

std::vector<EventSet> published_combos() {
  using E = EventCode;
  return {{E::A1, E::A2, E::C1, E::C2, E::E},
          {E::A1, E::A2, E::D1, E::D2},
          {E::A1, E::A2, E::E},
          {E::A1, E::A2, E::F},
          {E::B1, E::B2, E::E},
          {E::C1, E::C2, E::E},
          {E::D1, E::D2},
          {E::E},
          {E::F}};
}

std::string point_name(const PointVec& v) {
  std::vector<std::string> parts;
  for (int i = 0; i < 4; ++i)
    if (v[i]) parts.push_back("a" + std::to_string(i + 1));
  return join(parts, "+");
}

std::vector<PointVec> point_expressions() {
  std::vector<PointVec> out;
  for (int r = 1; r <= 3; ++r) {
    // index subsets of size r in lexicographic order
    std::vector<std::vector<int>> subs;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      subs.push_back(idx);
      int i = r - 1;
      while (i >= 0 && idx[i] == 4 - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    for (const auto& sub : subs) {
      PointVec v = {0, 0, 0, 0};
      for (int i : sub) v[i] = 1;
      out.push_back(v);
    }
  }
  return out;
}

RecordTable records() { return relabel(EventSet{}); }

RecordTable relabel(const EventSet& events_in) {
  RecordTable table;
  table.events = close_events(events_in);
  std::vector<Row> forms;
  for (EventCode c : table.events) forms.push_back(to_row(event_form(c)));
  std::vector<Row> out_forms;
  for (int cl = 0; cl < kClassCount; ++cl) {
    bool in = std::any_of(kClassCodes[cl].begin(), kClassCodes[cl].end(), [&](EventCode c) {
      return std::find(table.events.begin(), table.events.end(), c) != table.events.end();
    });
    if (!in) out_forms.push_back(to_row(kClassForms[cl]));
  }
  if (!feasible_parts(forms, out_forms)) throw UsageError("event set is not realizable");

  for (const PointVec& pt : point_expressions()) {
    bool placed = false;
    for (auto& cl : table.classes) {
      if (span_solve(forms, point_diff(pt, cl.front()))) {
        cl.push_back(pt);
        placed = true;
        break;
      }
    }
    if (!placed) table.classes.push_back({pt});
  }

  // Two distinct classes must be provably unequal under the full system.
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    for (std::size_t j = i + 1; j < table.classes.size(); ++j) {
      std::vector<Row> eqs = forms;
      eqs.push_back(point_diff(table.classes[i].front(), table.classes[j].front()));
      if (feasible_parts(eqs, out_forms))
        throw VerificationError("two landing-point classes are not provably distinct");
    }

  table.rows = record_rows();
  return table;
}

std::vector<std::array<int, 3>> class_pattern(const RecordTable& table) {
  std::map<PointVec, int> idx;
  for (std::size_t ci = 0; ci < table.classes.size(); ++ci)
    for (const PointVec& pt : table.classes[ci]) idx[pt] = static_cast<int>(ci);
  std::vector<std::array<int, 3>> pat;
  std::map<int, int> seen;
  for (const auto& row : table.rows) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) {
      int c = idx.at(row[i]);
      r[i] = seen.emplace(c, static_cast<int>(seen.size())).first->second;
    }
    pat.push_back(r);
  }
  return pat;
}

std::vector<std::array<int, 3>> pattern_from_rows(
    const std::vector<std::array<std::string, 3>>& rows) {
  std::vector<std::array<int, 3>> pat;
  std::map<std::string, int> seen;
  for (const auto& row : rows) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i)
      r[i] = seen.emplace(row[i], static_cast<int>(seen.size())).first->second;
    pat.push_back(r);
  }
  return pat;
}

std::vector<std::array<std::string, 3>> published_table3_rows() {
  return {{"a1", "a1+a2", "a1+a2+a3"}, {"a1", "a1+a2", "a1+a2+a4"}, {"a1", "a1+a3", "a1+a2+a3"},
          {"a1", "a1+a3", "a1+a3+a4"}, {"a1", "a1+a4", "a1+a2+a4"}, {"a1", "a1+a4", "a1+a3+a4"},
          {"a2", "a1+a2", "a1+a2+a3"}, {"a2", "a1+a2", "a1+a2+a4"}, {"a2", "a2+a3", "a1+a2+a3"},
          {"a2", "a2+a3", "a2+a3+a4"}, {"a2", "a2+a4", "a1+a2+a4"}, {"a2", "a2+a4", "a2+a3+a4"},
          {"a3", "a1+a3", "a1+a2+a3"}, {"a3", "a1+a3", "a1+a3+a4"}, {"a3", "a2+a3", "a1+a2+a3"},
          {"a3", "a2+a3", "a2+a3+a4"}, {"a3", "a3+a4", "a1+a3+a4"}, {"a3", "a3+a4", "a3+a3+a4"},
          {"a4", "a1+a4", "a1+a2+a4"}, {"a4", "a1+a4", "a1+a3+a4"}, {"a4", "a2+a4", "a1+a2+a4"},
          {"a4", "a2+a4", "a2+a3+a4"}, {"a4", "a3+a4", "a1+a3+a4"}, {"a4", "a3+a4", "a2+a3+a4"}};
}

std::vector<std::array<std::string, 3>> published_table4_rows() {
  return {{"a1", "j1", "j4"}, {"a1", "j1", "j2"}, {"a1", "j3", "j4"}, {"a1", "j3", "a1+a3+a4"},
          {"a1", "j5", "j2"}, {"a1", "j5", "a1+a3+a4"}, {"a2", "j1", "j4"}, {"a2", "j1", "j2"},
          {"a2", "j5", "j4"}, {"a2", "j5", "a2+a3+a4"}, {"a2", "j4", "j2"}, {"a2", "j4", "a2+a3+a4"},
          {"j1", "j3", "j4"}, {"j1", "j3", "a1+a3+a4"}, {"j1", "j5", "j4"}, {"j1", "j5", "a2+a3+a4"},
          {"j1", "j2", "a1+a3+a4"}, {"j1", "j2", "a2+a3+a4"}, {"j3", "j5", "j2"},
          {"j3", "j5", "a1+a3+a4"}, {"j3", "j4", "j2"}, {"j3", "j4", "a2+a3+a4"},
          {"j3", "j2", "a1+a3+a4"}, {"j3", "j2", "a2+a3+a4"}};
}

std::vector<std::pair<PointVec, PointVec>> undetermined_pairs() {
  auto points = point_expressions();
  std::vector<std::pair<PointVec, PointVec>> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Row d = point_diff(points[i], points[j]);
      if (feasible_parts({d}, {})) out.push_back({points[i], points[j]});
    }
  if (out.size() != 10)
    throw VerificationError("expected exactly 10 undetermined landing pairs, found " +
                            std::to_string(out.size()));
  for (const auto& [u, v] : out) {
    Row d = point_diff(u, v);
    bool known = false;
    for (int cl = 0; cl < kClassCount; ++cl) {
      Row f = to_row(kClassForms[cl]);
      Row nf;
      for (int k = 0; k < 4; ++k) nf[k] = -f[k];
      known = known || d == f || d == nf;
    }
    if (!known)
      throw VerificationError("undetermined pair " + point_name(u) + " = " + point_name(v) +
                              " matches no event form");
  }
  return out;
}

CoverReport blocking_cover_search(const EventSet& events) {
  RecordTable table = relabel(events);
  int k = static_cast<int>(table.classes.size());
  std::map<PointVec, int> idx;
  for (int ci = 0; ci < k; ++ci)
    for (const PointVec& pt : table.classes[ci]) idx[pt] = ci;
  std::vector<std::set<int>> row_classes;
  for (const auto& row : table.rows) {
    std::set<int> s;
    for (const PointVec& pt : row) s.insert(idx.at(pt));
    row_classes.push_back(std::move(s));
  }
  auto hits_all = [&](const std::vector<int>& sub) {
    for (const auto& rc : row_classes) {
      bool hit = false;
      for (int c : sub) hit = hit || rc.count(c) > 0;
      if (!hit) return false;
    }
    return true;
  };
  CoverReport rep;
  for (int a = 0; a < k && !rep.found; ++a)
    if (hits_all({a})) {
      rep.found = true;
      rep.cover = {a};
    }
  for (int a = 0; a < k && !rep.found; ++a)
    for (int b = a + 1; b < k && !rep.found; ++b)
      if (hits_all({a, b})) {
        rep.found = true;
        rep.cover = {a, b};
      }
  for (int a = 0; a < k && !rep.found; ++a)
    for (int b = a + 1; b < k && !rep.found; ++b)
      for (int c = b + 1; c < k && !rep.found; ++c)
        if (hits_all({a, b, c})) {
          rep.found = true;
          rep.cover = {a, b, c};
        }
  std::string classes_text = "NONE";
  if (rep.found) {
    std::vector<std::string> names;
    for (int c : rep.cover) names.push_back(point_name(table.classes[c].front()));
    classes_text = join(names, ",");
  }
  rep.line = "COMBO " + format_event_set(table.events) + " cover=" + classes_text;
  return rep;
}

}  // namespace gh
