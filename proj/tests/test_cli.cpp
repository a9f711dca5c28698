#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

// Drives the installed command line binary end to end. GHTOOL_PATH is
// injected by the build so the tests always run the freshly built tool.

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(GHTOOL_PATH) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int count_prefixed(const std::vector<std::string>& lines, const std::string& prefix) {
  int k = 0;
  for (const auto& l : lines)
    if (l.rfind(prefix, 0) == 0) ++k;
  return k;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("factor checks pass and report one line each") {
    auto res = run("factor-check --n 3");
    CHECK(res.code == 0);
    auto lines = lines_of(res.out);
    CHECK(lines.size() >= 8);
    bool saw_eq6 = false;
    for (const auto& l : lines) {
      CHECK(l.rfind("CHECK ", 0) == 0);
      CHECK(l.find(" PASS") != std::string::npos);
      if (l == "CHECK eq6 PASS") saw_eq6 = true;
    }
    CHECK(saw_eq6);
  }

  TEST_CASE("factor check rejects unsupported arity") {
    CHECK(run("factor-check --n 7").code == 2);
  }

  TEST_CASE("solve prints one safe order") {
    auto res = run("solve --lengths 1,2,4 --blocked 5,6");
    CHECK(res.code == 0);
    CHECK(res.out == "2 1 4\n");
    auto machine = run("solve --lengths 1,2,4 --blocked 5,6 --machine");
    CHECK(machine.out == "2\t1\t4\n");
  }

  TEST_CASE("solve accepts rational data") {
    auto res = run("solve --lengths 3/7,6/7,12/7 --blocked 15/7,18/7");
    CHECK(res.code == 0);
    CHECK(res.out == "6/7 3/7 12/7\n");
  }

  TEST_CASE("solve rejects a blocked total sum") {
    auto res = run("solve --lengths 1,2,3,4 --blocked 2,3,10", true);
    CHECK(res.code == 2);
    CHECK(res.out.find("error:") != std::string::npos);
  }

  TEST_CASE("solve reads instance files") {
    const char* path = "cli_test_instance.txt";
    {
      std::ofstream f(path);
      f << "lengths: 1, 2, 4\nblocked: 5, 6\n";
    }
    auto res = run(std::string("solve --instance ") + path);
    CHECK(res.code == 0);
    CHECK(res.out == "2 1 4\n");
    // --instance excludes the inline flags.
    CHECK(run(std::string("solve --instance ") + path + " --lengths 1,2").code == 2);
    std::remove(path);
    CHECK(run("solve --instance cli_missing_instance.txt").code == 2);
  }

  TEST_CASE("oracle enumerates safe orders in order") {
    auto res = run("oracle --lengths 1,2,3 --blocked 1,2");
    CHECK(res.code == 0);
    CHECK(res.out == "3 1 2\n3 2 1\n");
    auto count = run("oracle --lengths 1,2,3 --blocked 1,2 --count-only");
    CHECK(count.out == "2\n");
    auto lone = run("oracle --lengths 1,2,3 --blocked 3,5 --machine");
    CHECK(lone.out == "1\t3\t2\n");
  }

  TEST_CASE("events detection output forms") {
    CHECK(run("events --lengths 1,2,3,4").out == "A1 A2 C1 C2 E\n");
    CHECK(run("events --lengths 1,2,3,4 --machine").out == "A1\nA2\nC1\nC2\nE\n");
    CHECK(run("events --lengths 1,2,4,8").out == "none\n");
    CHECK(run("events --lengths 1,2,3").code == 2);
    CHECK(run("events --lengths 1,3,2,4").code == 2);
  }

  TEST_CASE("subset sums report") {
    auto res = run("subset-sums --lengths 1,2,3");
    CHECK(res.code == 0);
    CHECK(res.out == "distinct: no\ncollision: 1+2 = 3\n");
    CHECK(run("subset-sums --lengths 1,2,3 --machine").out ==
          "distinct\tno\ncollision\t1+2\t3\n");
    CHECK(run("subset-sums --lengths 1,2,4,8").out == "distinct: yes\n");
  }

  TEST_CASE("singularity probe") {
    CHECK(run("singular --n 4 --lengths 1,2,3,4 --blocked 2,3,10").out == "singular: yes\n");
    CHECK(run("singular --n 4 --lengths 1,2,3,4 --blocked 1,2,3").out == "singular: no\n");
    CHECK(run("singular --n 4 --lengths 1,2,3,4 --blocked 2,3,10 --machine").out ==
          "singular\tyes\n");
    CHECK(run("singular --n 5 --lengths 1,2,3,4,5 --blocked 1,2,3,4").code == 2);
  }

  TEST_CASE("antisym emits the polynomial") {
    auto res = run("antisym --n 2");
    CHECK(res.code == 0);
    CHECK(res.out == "+1*x1 -1*x2\n");
    const char* path = "cli_test_poly.txt";
    CHECK(run(std::string("antisym --n 2 --out ") + path).code == 0);
    std::ifstream f(path);
    std::string text;
    std::getline(f, text);
    f.close();
    CHECK(text == "+1*x1 -1*x2");
    std::remove(path);
    CHECK(run("antisym --n 6").code == 2);  // needs --allow-big
  }

  TEST_CASE("table verification is fully green") {
    auto res = run("verify-tables");
    CHECK(res.code == 0);
    auto lines = lines_of(res.out);
    CHECK(count_prefixed(lines, "TABLE2 ") == 45);
    CHECK(count_prefixed(lines, "COMBO ") == 14);
    CHECK(count_prefixed(lines, "EXTRA ") == 5);
    CHECK(count_prefixed(lines, "MISSING") == 0);
    bool first_pair = false, all_covers_none = true;
    for (const auto& l : lines) {
      if (l == "TABLE2 A1 A2 computed=always paper=always MATCH") first_pair = true;
      if (l.rfind("COMBO ", 0) == 0 && l.find("cover=NONE") == std::string::npos)
        all_covers_none = false;
    }
    CHECK(first_pair);
    CHECK(all_covers_none);
  }

  TEST_CASE("usage errors exit with code 2, help with 0") {
    CHECK(run("nosuch", true).code == 2);
    CHECK(run("", true).code == 2);
    CHECK(run("--help", true).code == 0);
    CHECK(run("solve --help", true).code == 0);
    CHECK(run("solve", true).code == 2);
    CHECK(run("solve --lengths 1,2 --blocked x", true).code == 2);
    CHECK(run("antisym", true).code == 2);  // --n required
  }
}
