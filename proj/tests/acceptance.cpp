// Acceptance suite: reproduces every worked example and runs the
// exhaustive desk-scale verification, one printed line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mnesor/checker.hpp"
#include "mnesor/cli.hpp"
#include "mnesor/relalg.hpp"

using namespace mnesor;

namespace {

const std::string data_dir = MNESOR_DATA_DIR;

int failures = 0;

void criterion(int n, const std::string& desc, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " — " << desc
              << " (" << elapsed << "s)";
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::string> eval_args(const std::string& query) {
    return {"eval", "-m", data_dir + "/membership.csv",
            "-t", "a=" + data_dir + "/a.csv",
            "-t", "b=" + data_dir + "/b.csv",
            "-t", "x=" + data_dir + "/x.csv",
            "-t", "y=" + data_dir + "/y.csv",
            "-t", "sweden=" + data_dir + "/sweden.csv",
            "-t", "australia=" + data_dir + "/australia.csv",
            "-t", "europe=" + data_dir + "/europe.csv",
            query};
}

const PropertyResult* find(const Report& r, const std::string& kind,
                           const std::string& label) {
    return r.find(kind, label);
}

bool require_status(const Report& r, const std::string& kind, const std::string& label,
                    Status want, std::string& detail) {
    const auto* p = find(r, kind, label);
    if (!p) {
        detail += "missing property " + label + "; ";
        return false;
    }
    if (p->status != want) {
        detail += label + " is " + to_string(p->status) + ", wanted " + to_string(want) +
                  "; ";
        return false;
    }
    return true;
}

// Random granular-expression source text over the given names.
std::string random_expr(std::mt19937_64& rng, const std::vector<std::string>& names,
                        int depth) {
    if (depth == 0 || rng() % 3 == 0) {
        auto pick = rng() % (names.size() + 2);
        if (pick == names.size()) return "TOP";
        if (pick == names.size() + 1) return "BOT";
        return names[pick];
    }
    switch (rng() % 3) {
        case 0: return "(" + random_expr(rng, names, depth - 1) + " & " +
                       random_expr(rng, names, depth - 1) + ")";
        case 1: return "(" + random_expr(rng, names, depth - 1) + " | " +
                       random_expr(rng, names, depth - 1) + ")";
        default: return "!" + random_expr(rng, names, depth - 1);
    }
}

} // namespace

int main() {
    criterion(1, "union example {Sweden,Germany} + {France,Sweden} via cli eval", 1.0,
              [](std::string& detail) {
                  auto r = run_cli(eval_args("a + b"));
                  if (r.rc != 0) { detail = "exit " + std::to_string(r.rc); return false; }
                  if (r.out != "key\nFrance\nGermany\nSweden\n") {
                      detail = "stdout was: " + r.out;
                      return false;
                  }
                  return true;
              });

    criterion(2, "intersection example, NATO among witnesses, witness-independence", 1.0,
              [](std::string& detail) {
                  auto r = run_cli(eval_args("x & y"));
                  if (r.rc != 0 || r.out != "key\nGermany\n") {
                      detail = "cli intersection mismatch";
                      return false;
                  }
                  Relalg ra(MembershipEnv::load(data_dir + "/membership.csv"));
                  const auto& s = ra.space();
                  auto x = s.make({"Germany", "Denmark"});
                  auto y = s.make({"Germany", "Sweden"});
                  auto nato = ra.env().resolve("NATO");
                  auto ws = find_all_witnesses(s, x, y);
                  bool has_nato = false;
                  auto expected = s.make({"Germany"});
                  for (const auto& w : ws) {
                      if (s.bitrop().equal(w, nato)) has_nato = true;
                      if (!s.equal(s.scale(y, w), expected)) {
                          detail = "witness " + s.bitrop().to_string(w) +
                                   " gives a different intersection";
                          return false;
                      }
                  }
                  if (!has_nato) { detail = "NATO not among witnesses"; return false; }
                  return true;
              });

    criterion(3, "selection identities: europe[NATO]+europe[!NATO], Sweden[EU], Australia[EU]",
              1.0, [](std::string& detail) {
                  auto lhs = run_cli(eval_args("europe[NATO] + europe[!NATO]"));
                  auto europe = run_cli(eval_args("europe"));
                  if (lhs.rc != 0 || lhs.out != europe.out) {
                      detail = "europe[NATO] + europe[!NATO] != europe";
                      return false;
                  }
                  if (run_cli(eval_args("sweden[EU]")).out != "key\nSweden\n") {
                      detail = "Sweden EU filtering failure not reproduced";
                      return false;
                  }
                  if (run_cli(eval_args("australia[EU]")).out != "key\n") {
                      detail = "Australia EU matching failure not reproduced";
                      return false;
                  }
                  return true;
              });

    criterion(4, "relation model universes 0..4: exhaustive space suite passes", 60.0,
              [](std::string& detail) {
                  for (std::size_t u = 0; u <= 4; ++u) {
                      CheckPlan plan;
                      plan.model = ModelKind::Relation;
                      plan.universe = u;
                      auto report = run_check(plan);
                      for (const auto& sec : report.sections) {
                          if (sec.kind != "space") continue;
                          for (const auto& p : sec.properties)
                              if (p.status != Status::Pass) {
                                  detail = "u=" + std::to_string(u) + ": " + p.label +
                                           " " + to_string(p.status);
                                  return false;
                              }
                      }
                  }
                  return true;
              });

    criterion(5, "subset bitrop universe 3: (1)(2)(3) pass, cancellation fails self-certifying",
              5.0, [](std::string& detail) {
                  CheckPlan plan;
                  plan.model = ModelKind::Subset;
                  plan.universe = 3;
                  auto report = run_check(plan);
                  bool ok = require_status(report, "bitrop", "unital", Status::Pass, detail) &&
                            require_status(report, "bitrop", "center-idempotent",
                                           Status::Pass, detail) &&
                            require_status(report, "bitrop", "absorption", Status::Pass,
                                           detail) &&
                            require_status(report, "bitrop", "cancellation", Status::Fail,
                                           detail);
                  if (!ok) return false;
                  const auto* cancel = find(report, "bitrop", "cancellation");
                  if (!cancel->counterexample) {
                      detail = "no counterexample attached";
                      return false;
                  }
                  SubsetBitrop b({"a", "b", "c"});
                  if (!verify_counterexample(b, *cancel->counterexample)) {
                      detail = "counterexample does not re-verify";
                      return false;
                  }
                  return true;
              });

    criterion(6, "min-plus bitrop [-8,8]: (1)(2)(4) pass, (3) pass or boundary-restricted",
              5.0, [](std::string& detail) {
                  CheckPlan plan;
                  plan.model = ModelKind::MinPlus;
                  plan.lo = -8;
                  plan.hi = 8;
                  auto report = run_check(plan);
                  bool ok = require_status(report, "bitrop", "unital", Status::Pass, detail) &&
                            require_status(report, "bitrop", "center-idempotent",
                                           Status::Pass, detail) &&
                            require_status(report, "bitrop", "cancellation", Status::Pass,
                                           detail);
                  if (!ok) return false;
                  const auto* abs = find(report, "bitrop", "absorption");
                  if (!abs || (abs->status != Status::Pass &&
                               abs->status != Status::Restricted)) {
                      detail = "absorption not PASS/RESTRICTED";
                      return false;
                  }
                  return true;
              });

    criterion(7, "truncated-tropical [-6,0]: full space suite passes; add=min, intersect=max",
              5.0, [](std::string& detail) {
                  CheckPlan plan;
                  plan.model = ModelKind::TruncatedTropical;
                  plan.lo = -6;
                  plan.hi = 0;
                  auto report = run_check(plan);
                  for (const auto& sec : report.sections) {
                      if (sec.kind != "space") continue;
                      for (const auto& p : sec.properties)
                          if (p.status != Status::Pass) {
                              detail = p.label + " " + to_string(p.status);
                              return false;
                          }
                  }
                  TruncatedTropicalSpace s(-6);
                  for (const auto& x : s.carrier())
                      for (const auto& y : s.carrier()) {
                          if (!s.equal(s.add(x, y), s.make(std::min(x.v, y.v)))) {
                              detail = "add != min";
                              return false;
                          }
                          if (!s.equal(intersect(s, x, y), s.make(std::max(x.v, y.v)))) {
                              detail = "intersect != max";
                              return false;
                          }
                      }
                  return true;
              });

    criterion(8, "extended min-plus: absorption fails with x bound to the identity", 5.0,
              [](std::string& detail) {
                  CheckPlan plan;
                  plan.model = ModelKind::ExtendedMinPlus;
                  plan.lo = -6;
                  plan.hi = 6;
                  auto report = run_check(plan);
                  const auto* abs = find(report, "space", "absorption");
                  if (!abs || abs->status != Status::Fail) {
                      detail = "absorption did not FAIL";
                      return false;
                  }
                  if (!abs->counterexample || abs->counterexample->bindings.empty() ||
                      abs->counterexample->bindings[0].second != "inf") {
                      detail = "counterexample does not bind x to the identity";
                      return false;
                  }
                  ExtendedMinPlusSpace s(-6, 6);
                  if (!verify_counterexample(s, *abs->counterexample)) {
                      detail = "counterexample does not re-verify";
                      return false;
                  }
                  return true;
              });

    criterion(9, "randomized universe 8, seed 123, 1000 cases: intersect oracle and selection composition",
              30.0, [](std::string& detail) {
                  std::mt19937_64 rng(123);

                  RelationSpace s({"a", "b", "c", "d", "e", "f", "g", "h"});
                  for (int i = 0; i < 1000; ++i) {
                      auto x = s.from_bits(rng() & 0xff);
                      auto y = s.from_bits(rng() & 0xff);
                      if (intersect(s, x, y).bits != (x.bits & y.bits)) {
                          detail = "intersect oracle mismatch at case " + std::to_string(i);
                          return false;
                      }
                  }

                  std::vector<std::vector<std::string>> mem{{"key", "O1", "O2", "O3", "O4"}};
                  std::vector<std::string> keys{"k1", "k2", "k3", "k4",
                                                "k5", "k6", "k7", "k8"};
                  for (const auto& k : keys) {
                      std::vector<std::string> row{k};
                      for (int c = 0; c < 4; ++c) row.push_back(rng() % 2 ? "1" : "0");
                      mem.push_back(row);
                  }
                  Relalg ra(MembershipEnv::from_records(mem));
                  std::vector<std::string> names{"O1", "O2", "O3", "O4"};
                  for (int i = 0; i < 1000; ++i) {
                      Table t;
                      auto bits = rng() & 0xff;
                      for (std::size_t k = 0; k < keys.size(); ++k)
                          if (bits >> k & 1) t.rows[keys[k]] = {};
                      auto a = random_expr(rng, names, 2);
                      auto b = random_expr(rng, names, 2);
                      auto composed = ra.select(ra.select(t, a), b);
                      auto meet = ra.select(t, "(" + a + ") & (" + b + ")");
                      if (!(composed == meet)) {
                          detail = "selection composition mismatch for A=" + a +
                                   " B=" + b;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "determinism: repeated commands give byte-identical stdout", 30.0,
              [](std::string& detail) {
                  std::vector<std::vector<std::string>> commands{
                      eval_args("a + b"),
                      eval_args("x & y"),
                      eval_args("europe[NATO] + europe[!NATO]"),
                      {"axioms", "--model", "relation", "--universe", "3", "--exhaustive"},
                      {"axioms", "--model", "subset", "--universe", "3", "--only",
                       "cancellation"},
                      {"axioms", "--model", "relation", "--universe", "6", "--random",
                       "500", "--seed", "9"},
                  };
                  for (const auto& cmd : commands) {
                      if (run_cli(cmd).out != run_cli(cmd).out) {
                          detail = "stdout differs for " + cmd.front();
                          return false;
                      }
                  }
                  return true;
              });

    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
