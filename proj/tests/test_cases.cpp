#include "doctest.h"

#include <algorithm>
#include <set>

#include "gh/cases.hpp"

using namespace gh;

namespace {

std::array<Rat, 4> pt(long long a, long long b, long long c, long long d) {
  return {Rat(a), Rat(b), Rat(c), Rat(d)};
}

LinForm form_of(EventCode c) {
  auto f = event_form(c);
  return {Rat(f[0]), Rat(f[1]), Rat(f[2]), Rat(f[3])};
}

Rat eval_form(const LinForm& f, const std::array<Rat, 4>& a) {
  return f[0] * a[0] + f[1] * a[1] + f[2] * a[2] + f[3] * a[3];
}

}  // namespace

TEST_SUITE("cases") {
  TEST_CASE("event names round trip") {
    CHECK(event_name(EventCode::A1) == "A1");
    CHECK(event_name(EventCode::F) == "F");
    CHECK(event_from_name("C2") == EventCode::C2);
    CHECK_FALSE(event_from_name("G1").has_value());
    CHECK_FALSE(event_from_name("a1").has_value());
  }

  TEST_CASE("paired spellings share a defining form") {
    CHECK(event_form(EventCode::A1) == event_form(EventCode::A2));
    CHECK(event_form(EventCode::B1) == event_form(EventCode::B2));
    CHECK(event_form(EventCode::C1) == event_form(EventCode::C2));
    CHECK(event_form(EventCode::D1) == event_form(EventCode::D2));
    CHECK(event_form(EventCode::A1) == std::array<int, 4>{1, 1, -1, 0});
    CHECK(event_form(EventCode::E) == std::array<int, 4>{1, -1, -1, 1});
    CHECK(event_form(EventCode::F) == std::array<int, 4>{1, 1, 1, -1});
    CHECK(event_expressions(EventCode::A2) ==
          std::pair<std::string, std::string>("a1+a2+a4", "a3+a4"));
  }

  TEST_CASE("closure and formatting") {
    EventSet closed = close_events({EventCode::E, EventCode::A1});
    CHECK(closed == EventSet{EventCode::A1, EventCode::A2, EventCode::E});
    CHECK(format_event_set(closed) == "(A1,A2,E)");
    CHECK(format_event_set({}) == "()");
  }

  TEST_CASE("event detection") {
    CHECK(detect_events(pt(1, 2, 3, 4)) ==
          EventSet{EventCode::A1, EventCode::A2, EventCode::C1, EventCode::C2, EventCode::E});
    CHECK(detect_events(pt(1, 2, 3, 6)) ==
          EventSet{EventCode::A1, EventCode::A2, EventCode::F});
    CHECK(detect_events(pt(1, 2, 4, 8)).empty());
    CHECK_THROWS_AS(detect_events(pt(1, 3, 2, 4)), UsageError);
    CHECK_THROWS_AS(detect_events(pt(0, 1, 2, 3)), UsageError);
  }

  TEST_CASE("feasibility witness for the bare ordering") {
    auto w = feasible(LinearSystem{});
    REQUIRE(w.has_value());
    CHECK(*w == pt(1, 2, 3, 4));
  }

  TEST_CASE("feasibility with constraints") {
    LinearSystem sys;
    sys.equalities.push_back(form_of(EventCode::A1));
    auto w = feasible(sys);
    REQUIRE(w.has_value());
    CHECK(eval_form(form_of(EventCode::A1), *w) == 0);
    CHECK((*w)[0] > 0);
    CHECK((*w)[0] < (*w)[1]);
    CHECK((*w)[1] < (*w)[2]);
    CHECK((*w)[2] < (*w)[3]);

    sys.disequalities.push_back(form_of(EventCode::F));
    auto w2 = feasible(sys);
    REQUIRE(w2.has_value());
    CHECK(eval_form(form_of(EventCode::A1), *w2) == 0);
    CHECK(eval_form(form_of(EventCode::F), *w2) != 0);

    // a3 = a1+a2 and a4 = a1+a2 contradict a3 < a4.
    LinearSystem bad;
    bad.equalities.push_back(form_of(EventCode::A1));
    bad.equalities.push_back(form_of(EventCode::B1));
    CHECK_FALSE(feasible(bad).has_value());
  }

  TEST_CASE("pair classification") {
    CHECK(classify_pair(EventCode::A1, EventCode::A2) == PairClass::always);
    CHECK(classify_pair(EventCode::A1, EventCode::B1) == PairClass::never);
    CHECK(classify_pair(EventCode::A1, EventCode::C1) == PairClass::sometimes);
    CHECK(classify_pair(EventCode::E, EventCode::F) == classify_pair(EventCode::F, EventCode::E));
    CHECK_THROWS_AS(classify_pair(EventCode::E, EventCode::E), UsageError);
    CHECK(pair_class_name(PairClass::sometimes) == "sometimes");
  }

  TEST_CASE("archived compatibility matrix is well formed") {
    auto m = published_table2_matrix();
    for (int i = 0; i < 10; ++i) {
      REQUIRE(m[i].size() == 10);
      CHECK(m[i][i] == '-');
      for (int j = 0; j < 10; ++j) {
        CHECK(m[i][j] == m[j][i]);
        if (i != j) CHECK((m[i][j] == 'o' || m[i][j] == '^' || m[i][j] == 'x'));
      }
    }
  }

  TEST_CASE("computed classifications match the archived matrix") {
    auto rep = verify_table2();
    CHECK(rep.all_match);
    CHECK(rep.symmetric);
    CHECK(rep.mismatches == 0);
    REQUIRE(rep.lines.size() == 45);
    CHECK(rep.lines[0] == "TABLE2 A1 A2 computed=always paper=always MATCH");
    for (const auto& line : rep.lines) {
      CHECK(line.substr(0, 7) == "TABLE2 ");
      CHECK(line.find(" MATCH") != std::string::npos);
    }
  }

  TEST_CASE("every feasible combination is found, witnesses included") {
    auto combos = enumerate_feasible_combos();
    REQUIRE(combos.size() == 14);
    for (const auto& c : combos) {
      CHECK(detect_events(c.witness) == c.codes);
    }
    // Bitmask order starts with the empty combination.
    CHECK(combos[0].codes.empty());
  }

  TEST_CASE("published case list is the computed list minus four degenerate merges") {
    auto combos = enumerate_feasible_combos();
    std::set<EventSet> computed;
    for (const auto& c : combos) computed.insert(c.codes);

    auto pub = published_combos();
    REQUIRE(pub.size() == 9);
    std::set<EventSet> published(pub.begin(), pub.end());
    CHECK(published.size() == 9);
    for (const auto& s : published) CHECK(computed.count(s) == 1);

    std::set<EventSet> extras;
    for (const auto& s : computed)
      if (!published.count(s)) extras.insert(s);
    std::set<EventSet> expect{
        EventSet{},
        EventSet{EventCode::A1, EventCode::A2},
        EventSet{EventCode::B1, EventCode::B2},
        EventSet{EventCode::C1, EventCode::C2},
        EventSet{EventCode::A1, EventCode::A2, EventCode::C1, EventCode::C2},
    };
    CHECK(extras == expect);
  }

  TEST_CASE("landing expressions") {
    auto pts = point_expressions();
    REQUIRE(pts.size() == 14);
    CHECK(point_name(pts[0]) == "a1");
    CHECK(point_name(PointVec{1, 0, 1, 0}) == "a1+a3");
    CHECK(point_name(PointVec{0, 1, 1, 1}) == "a2+a3+a4");
    // 4 singles, 6 pairs, 4 triples.
    int ones = 0, twos = 0, threes = 0;
    for (const auto& p : pts) {
      int w = p[0] + p[1] + p[2] + p[3];
      if (w == 1) ++ones;
      if (w == 2) ++twos;
      if (w == 3) ++threes;
    }
    CHECK(ones == 4);
    CHECK(twos == 6);
    CHECK(threes == 4);
  }

  TEST_CASE("bare record table") {
    RecordTable t = records();
    REQUIRE(t.rows.size() == 24);
    CHECK(t.classes.size() == 14);
    CHECK(t.events.empty());
    // Row 1: order (a1,a2,a3,a4).
    CHECK(t.rows[0] == std::array<PointVec, 3>{PointVec{1, 0, 0, 0}, PointVec{1, 1, 0, 0},
                                               PointVec{1, 1, 1, 0}});
    // Row 24: order (a4,a3,a2,a1).
    CHECK(t.rows[23] == std::array<PointVec, 3>{PointVec{0, 0, 0, 1}, PointVec{0, 0, 1, 1},
                                                PointVec{0, 1, 1, 1}});
    // Row 18: order (a3,a4,a2,a1).
    CHECK(t.rows[17] == std::array<PointVec, 3>{PointVec{0, 0, 1, 0}, PointVec{0, 0, 1, 1},
                                                PointVec{0, 1, 1, 1}});
  }

  TEST_CASE("relabeling merges landing classes") {
    CHECK(relabel({}).classes.size() == 14);
    CHECK(relabel({EventCode::F}).classes.size() == 13);
    RecordTable acce = relabel({EventCode::A1, EventCode::A2, EventCode::C1, EventCode::C2,
                                EventCode::E});
    CHECK(acce.classes.size() == 9);
    // Closure fills in partner spellings before merging.
    CHECK(relabel({EventCode::A1}).classes.size() ==
          relabel({EventCode::A1, EventCode::A2}).classes.size());
    CHECK_THROWS_AS(relabel({EventCode::A1, EventCode::B1}), UsageError);
  }

  TEST_CASE("undetermined pairs are exactly the event equations") {
    auto pairs = undetermined_pairs();
    REQUIRE(pairs.size() == 10);
    int per_form[6] = {0, 0, 0, 0, 0, 0};
    const EventCode reps[6] = {EventCode::A1, EventCode::B1, EventCode::C1,
                               EventCode::D1, EventCode::E,  EventCode::F};
    for (const auto& [u, v] : pairs) {
      std::array<int, 4> d{u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]};
      std::array<int, 4> nd{-d[0], -d[1], -d[2], -d[3]};
      bool matched = false;
      for (int k = 0; k < 6; ++k) {
        auto f = event_form(reps[k]);
        if (d == f || nd == f) {
          ++per_form[k];
          matched = true;
          break;
        }
      }
      CHECK(matched);
    }
    // Two spellings each for A..D, one for E and F.
    CHECK(per_form[0] == 2);
    CHECK(per_form[1] == 2);
    CHECK(per_form[2] == 2);
    CHECK(per_form[3] == 2);
    CHECK(per_form[4] == 1);
    CHECK(per_form[5] == 1);
  }

  TEST_CASE("archived bare table differs in one entry of row 18") {
    RecordTable bare = records();
    auto pub = published_table3_rows();
    REQUIRE(pub.size() == 24);
    int mismatches = 0;
    for (int r = 0; r < 24; ++r) {
      for (int k = 0; k < 3; ++k) {
        std::string computed = point_name(bare.rows[r][k]);
        if (computed != pub[r][k]) {
          ++mismatches;
          CHECK(r == 17);
          CHECK(k == 2);
          CHECK(pub[r][k] == "a3+a3+a4");
          CHECK(computed == "a2+a3+a4");
        }
      }
    }
    CHECK(mismatches == 1);
  }

  TEST_CASE("archived relabeled table matches up to class renaming") {
    RecordTable acce = relabel({EventCode::A1, EventCode::A2, EventCode::C1, EventCode::C2,
                                EventCode::E});
    CHECK(class_pattern(acce) == pattern_from_rows(published_table4_rows()));
    // The bare pattern does not match the relabeled one.
    CHECK(class_pattern(records()) != class_pattern(acce));
  }

  TEST_CASE("no three landing classes block every order") {
    for (EventSet events : {EventSet{},
                            EventSet{EventCode::A1, EventCode::A2, EventCode::C1, EventCode::C2,
                                     EventCode::E},
                            EventSet{EventCode::F}}) {
      auto rep = blocking_cover_search(events);
      CHECK_FALSE(rep.found);
      CHECK(rep.cover.empty());
      CHECK(rep.line == "COMBO " + format_event_set(events) + " cover=NONE");
    }
  }
}
