#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ndmap/nd_matrix.hpp"
#include "ndmap/params.hpp"

namespace ndmap::cli {

enum class Command {
  sweep,
  trajectories,
  crossing,
  bound,
  assemble_dump,
  truncation_check
};

enum class Format { csv, json };

/// Parsed command line. `size` is the matrix dimension 4J.
struct RunConfig {
  Command command = Command::sweep;
  double a = 0.0;
  std::optional<double> b;
  std::optional<double> b_min;
  std::optional<double> b_max;
  double b_step = 1.0;
  double k = 1.0;
  int size = 400;
  double tol = kDefaultDelta;
  double guard = kDefaultGuard;
  std::string out;  // empty writes to the output stream
  Format format = Format::csv;
  // crossing
  std::uint64_t n = 0;
  double eps = 0.1;
  // assemble-dump
  AssemblyMethod method = AssemblyMethod::closed_form;
  int series_cutoff = 2000;
  unsigned threads = 0;

  int J() const { return size / 4; }
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;

// Default upper end of the sweep grid.
inline constexpr double kDefaultBMax = 200.0;

/// Parses argv (program name first). Returns the config, or an exit code if
/// parsing finished the run (help, usage errors); messages go to `out`/`err`.
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParseOutcome parse(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

// b values a sweep/trajectories run visits, in order.
std::vector<double> b_values(const RunConfig& config);

/// Executes a parsed config. Results go to config.out if set, otherwise to
/// `out`. Returns kExitPrecondition with a one-line diagnostic on `err` for
/// resonance or precondition failures.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse + run.
int main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace ndmap::cli
