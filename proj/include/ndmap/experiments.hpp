#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ndmap/params.hpp"

namespace ndmap {

/// One sweep point comparing the measured negative count of
/// Lambda(b) - Lambda(a) against d(b) - d(a).
struct BoundReport {
  double a = 0;
  double b = 0;
  double k = 1;
  int J = 0;
  double delta = kDefaultDelta;
  int measured_negative = 0;
  std::int64_t theoretical_bound = 0;
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
};

// A sweep row; `report` is empty when b was resonant and skipped.
struct SweepPoint {
  double b = 0;
  std::optional<BoundReport> report;

  bool skipped() const { return !report.has_value(); }
};

struct TrajectoryPoint {
  double b = 0;
  std::vector<double> eigenvalues;  // descending, length 4J; empty if skipped
  bool skipped = false;
};

struct CrossingAttempt {
  double eps = 0;
  int measured = 0;
};

struct CrossingReport {
  std::uint64_t n = 0;
  double center = 0;  // pi^2 n / k^2
  std::int64_t expected = 0;
  int measured = 0;  // from the last attempt
  std::vector<CrossingAttempt> attempts;

  bool agrees() const { return measured == expected; }
};

struct SweepOptions {
  double k = 1.0;
  int J = 100;
  double delta = kDefaultDelta;
  double guard = kDefaultGuard;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Negative counts of Lambda(b) - Lambda(a) for each b, in input order.
/// Throws ResonanceError if a is resonant and PreconditionError if some
/// b < a; resonant b values become skipped rows.
std::vector<SweepPoint> sweep(double a, std::span<const double> b_values,
                              const SweepOptions& options = {});

/// Full descending spectrum of Lambda(b) - Lambda(a) per b.
std::vector<TrajectoryPoint> trajectories(double a,
                                          std::span<const double> b_values,
                                          const SweepOptions& options = {});

/// Negative count of Lambda(c + eps) - Lambda(c - eps) at c = pi^2 n / k^2,
/// compared against multiplicity(n). On disagreement a second attempt is made
/// at eps / 2; both attempts are reported. Throws PreconditionError when the
/// window holds another scaled Neumann eigenvalue or n is not a sum of two
/// squares.
CrossingReport verify_crossing(std::uint64_t n, double eps,
                               const SweepOptions& options = {});

// b_min, b_min + step, ... up to b_max (inclusive within 1e-9 step).
std::vector<double> make_grid(double b_min, double b_max, double step);

}  // namespace ndmap
