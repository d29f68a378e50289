#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nvg {

enum class Command { growth, closed, interpolate, hypotheses, crosscheck };
enum class OutputFormat { table, csv, json };

// Parsed and validated invocation.  n_lo == n_hi for single-n commands;
// only `hypotheses` accepts a range.
struct RunConfig {
  Command command = Command::growth;
  int n_lo = 0;
  int n_hi = 0;
  int k_max = 0;
  long long budget = 100000000;
  int threads = 1;
  OutputFormat format = OutputFormat::table;
  std::optional<std::string> out_path;
  double tol = 1e-6;
};

// Runs the tool on argv-style args (program name excluded).  Results go to
// `out` (or the --out file), diagnostics to `err`.  Exit codes: 0 success,
// 1 usage or invalid configuration, 2 budget or resource, 3 verification
// mismatch.  The NVG_BUDGET environment variable supplies the budget when
// the --budget flag is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nvg
