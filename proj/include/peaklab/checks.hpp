#pragma once
// Registry of named verification checks.
//
// Every algebraic statement the library implements has a corresponding check
// that re-derives it from scratch at runtime, for all degrees n up to a bound.
// A check either passes, or fails and reports the first counterexample it
// found (degree plus the indices involved).  A few checks are report-only:
// they compute an open quantity (a conjectured dimension, the status of a
// conjectured chain equality), emit the result in their detail string and
// never fail.
//
// The registry is data driven -- id, statement, default bound, routine -- so
// the command-line driver and the documentation can enumerate it.  Running
// every check (`verify all`) is the executable union of the module test
// suites and serves as the acceptance gate of the repository.

#include <functional>
#include <string>
#include <vector>

namespace peaklab::checks {

struct CheckResult {
  bool pass = true;
  std::string detail;  // first counterexample witness, or a status report
};

struct CheckDef {
  std::string id;         // stable kebab-case name used by the CLI
  std::string statement;  // the verified statement, in words
  int default_n_max;      // bound applied when the caller does not give one
  bool report_only;       // computes and reports; never fails
  std::function<CheckResult(int n_max)> run;
};

// All registered checks, in a fixed deterministic order.
const std::vector<CheckDef>& registry();

// Lookup by id; nullptr when the id is unknown.
const CheckDef* find_check(const std::string& id);

// Run a check with the effective bound: n_max <= 0 selects the default.
CheckResult run_check(const CheckDef& def, int n_max = 0);

}  // namespace peaklab::checks
