#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lowdeg {

struct SelftestOptions {
  /// Negative control: adds 2 to every diagonal Gram entry of the built-in
  /// lattices before checking their signature.
  bool perturb_gram = false;
  /// Negative control: scans exceptional sets only up to the proven level
  /// bound minus this amount.
  long level_bound_decrement = 0;
};

struct SelftestResult {
  std::string property;
  bool passed = false;
  std::string detail;
};

/// Runs the brute-force oracle suite against the library.
std::vector<SelftestResult> run_selftest(const SelftestOptions& options = {});

/// One `[PASS]`/`[FAIL]` line per property; returns whether all passed.
bool print_selftest(const std::vector<SelftestResult>& results, std::ostream& out);

}  // namespace lowdeg
