#pragma once

// Command-line entry point, callable in-process for testing.  Subcommands:
//   element     print a basis element at permutation level or as coordinates
//   verify      run one named check (or "all") up to a degree bound
//   checks      list the registered checks with statements and bounds
//   report      emit a JSON/CSV summary of dimensions and invariants
//   idempotent  print one of the classical or peak Lie idempotents
//   eulerian    print the graded peak sums and their multiplication table
//   cartan      print the Cartan matrix of the peak algebra
//   radical     print the radical dimension chain of the peak algebra
// Exit codes: 0 success, 1 verification/serialization failure, 2 usage error.

#include <ostream>

namespace peaklab {

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace peaklab
