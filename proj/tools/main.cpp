#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gh/antisym.hpp"
#include "gh/cases.hpp"
#include "gh/check.hpp"
#include "gh/oracle.hpp"
#include "gh/poly.hpp"
#include "gh/solver.hpp"

namespace {

// exit 0: success / all checks pass; 1: a verification mismatch; 2: bad input
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

std::vector<gh::Rat> split_rats(const std::string& text) {
  std::vector<gh::Rat> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(gh::parse_rat(piece));
  return out;
}

std::string join_rats(const std::vector<gh::Rat>& vals, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += sep;
    out += gh::format_rat(vals[i]);
  }
  return out;
}

struct InstanceFlags {
  std::string lengths;
  std::string blocked;
  std::string file;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags, bool file_allowed = true) {
  auto* lens = cmd->add_option("--lengths", flags.lengths, "comma separated jump lengths (p or p/q)");
  auto* blk = cmd->add_option("--blocked", flags.blocked, "comma separated blocked points");
  if (file_allowed) {
    auto* file = cmd->add_option("--instance", flags.file, "instance file with lengths:/blocked: lines");
    file->excludes(lens)->excludes(blk);
  }
}

gh::Instance instance_from_flags(const InstanceFlags& flags) {
  if (!flags.file.empty()) return gh::read_instance_file(flags.file);
  if (flags.lengths.empty()) throw gh::UsageError("need --lengths or --instance");
  return gh::validate(split_rats(flags.lengths), split_rats(flags.blocked));
}

int run_factor_check(int n) {
  auto checks = gh::factor_checks(n);
  for (const auto& c : checks) {
    std::cout << "CHECK " << c.name << (c.pass ? " PASS" : " FAIL") << "\n";
    if (!c.pass && !c.detail.empty()) std::cerr << c.name << ": " << c.detail << "\n";
  }
  return gh::all_pass(checks) ? kOk : kMismatch;
}

int run_verify_tables() {
  bool ok = true;
  auto t2 = gh::verify_table2();
  for (const auto& line : t2.lines) std::cout << line << "\n";
  ok = ok && t2.all_match && t2.symmetric;

  auto combos = gh::enumerate_feasible_combos();
  for (const auto& combo : combos) {
    auto cover = gh::blocking_cover_search(combo.codes);
    std::cout << cover.line << "\n";
    ok = ok && !cover.found;
  }

  auto published = gh::published_combos();
  auto has = [&](const gh::EventSet& s) {
    for (const auto& combo : combos)
      if (combo.codes == s) return true;
    return false;
  };
  for (const auto& p : published)
    if (!has(p)) {
      std::cout << "MISSING " << gh::format_event_set(p) << "\n";
      ok = false;
    }
  for (const auto& combo : combos) {
    bool listed = false;
    for (const auto& p : published) listed = listed || combo.codes == p;
    if (!listed) std::cout << "EXTRA " << gh::format_event_set(combo.codes) << "\n";
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the grasshopper jump-ordering problem"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "tab separated machine readable output");

  auto* antisym_cmd = app.add_subcommand("antisym", "emit the antisymmetrized walk polynomial");
  int an = 0;
  int threads = 1;
  bool allow_big = false;
  std::string out_file;
  antisym_cmd->add_option("--n", an, "number of jump lengths")->required();
  antisym_cmd->add_option("--out", out_file, "write the polynomial to this file");
  antisym_cmd->add_option("--threads", threads, "worker threads for the signed sum");
  antisym_cmd->add_flag("--allow-big", allow_big, "permit n=6 despite its size");

  auto* factor_cmd = app.add_subcommand("factor-check", "run the factorization and coefficient checks");
  int fn = 0;
  factor_cmd->add_option("--n", fn, "arity to check (3, 4 or 5)")->required();

  auto* solve_cmd = app.add_subcommand("solve", "print one safe jump order");
  InstanceFlags solve_flags;
  add_instance_flags(solve_cmd, solve_flags);
  solve_cmd->add_flag("--machine", machine, "tab separated output");

  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate all safe jump orders");
  InstanceFlags oracle_flags;
  bool count_only = false;
  add_instance_flags(oracle_cmd, oracle_flags);
  oracle_cmd->add_flag("--count-only", count_only, "print only the number of safe orders");
  oracle_cmd->add_flag("--machine", machine, "tab separated output");

  auto* events_cmd = app.add_subcommand("events", "detect prefix-sum coincidence events");
  std::string events_lengths;
  events_cmd->add_option("--lengths", events_lengths, "four increasing lengths")->required();
  events_cmd->add_flag("--machine", machine, "one event per line");

  auto* tables_cmd =
      app.add_subcommand("verify-tables", "check the compatibility matrix, combinations and covers");
  (void)tables_cmd;

  auto* subset_cmd = app.add_subcommand("subset-sums", "check pairwise distinctness of subset sums");
  std::string subset_lengths;
  subset_cmd->add_option("--lengths", subset_lengths, "comma separated lengths")->required();
  subset_cmd->add_flag("--machine", machine, "tab separated output");

  auto* singular_cmd = app.add_subcommand("singular", "test a point against the quotient polynomial");
  int sn = 0;
  InstanceFlags singular_flags;
  singular_cmd->add_option("--n", sn, "arity (3 or 4)")->required();
  add_instance_flags(singular_cmd, singular_flags, /*file_allowed=*/false);
  singular_cmd->add_flag("--machine", machine, "tab separated output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*antisym_cmd) {
      gh::Poly f = gh::antisymmetrize(an, threads, allow_big);
      std::string text = gh::format_poly(f);
      if (out_file.empty()) {
        std::cout << text << "\n";
      } else {
        std::ofstream out(out_file);
        if (!out) throw gh::UsageError("cannot write " + out_file);
        out << text << "\n";
      }
      return kOk;
    }
    if (*factor_cmd) return run_factor_check(fn);
    if (*solve_cmd) {
      gh::Instance inst = instance_from_flags(solve_flags);
      std::vector<gh::Rat> order = gh::solve(inst);
      std::cout << join_rats(order, machine ? "\t" : " ") << "\n";
      return kOk;
    }
    if (*oracle_cmd) {
      gh::Instance inst = instance_from_flags(oracle_flags);
      auto orders = gh::enumerate_safe_orders(inst);
      if (count_only) {
        std::cout << orders.size() << "\n";
      } else {
        for (const auto& order : orders) std::cout << join_rats(order, machine ? "\t" : " ") << "\n";
      }
      return kOk;
    }
    if (*events_cmd) {
      std::vector<gh::Rat> vals = split_rats(events_lengths);
      if (vals.size() != 4) throw gh::UsageError("events needs exactly four lengths");
      gh::EventSet found = gh::detect_events({vals[0], vals[1], vals[2], vals[3]});
      if (machine) {
        for (gh::EventCode c : found) std::cout << gh::event_name(c) << "\n";
      } else {
        std::string line;
        for (gh::EventCode c : found) line += (line.empty() ? "" : " ") + gh::event_name(c);
        std::cout << (line.empty() ? "none" : line) << "\n";
      }
      return kOk;
    }
    if (*tables_cmd) return run_verify_tables();
    if (*subset_cmd) {
      std::vector<gh::Rat> vals = split_rats(subset_lengths);
      bool distinct = gh::has_distinct_subset_sums(vals);
      if (machine) {
        std::cout << "distinct\t" << (distinct ? "yes" : "no") << "\n";
      } else {
        std::cout << "distinct: " << (distinct ? "yes" : "no") << "\n";
      }
      if (!distinct) {
        auto coll = gh::find_subset_sum_collision(vals);
        if (coll) {
          std::string lhs = coll->first.empty() ? "0" : join_rats(coll->first, "+");
          std::string rhs = coll->second.empty() ? "0" : join_rats(coll->second, "+");
          if (machine)
            std::cout << "collision\t" << lhs << "\t" << rhs << "\n";
          else
            std::cout << "collision: " << lhs << " = " << rhs << "\n";
        }
      }
      return kOk;
    }
    if (*singular_cmd) {
      if (singular_flags.lengths.empty() || singular_flags.blocked.empty())
        throw gh::UsageError("singular needs --lengths and --blocked");
      std::vector<gh::Rat> a = split_rats(singular_flags.lengths);
      std::vector<gh::Rat> m = split_rats(singular_flags.blocked);
      bool sing = gh::is_singular(sn, a, m);
      if (machine)
        std::cout << "singular\t" << (sing ? "yes" : "no") << "\n";
      else
        std::cout << "singular: " << (sing ? "yes" : "no") << "\n";
      return kOk;
    }
  } catch (const gh::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const gh::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kMismatch;
  }
  return kBadInput;
}
