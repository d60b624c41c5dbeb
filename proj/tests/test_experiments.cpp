#include <doctest.h>

#include "ndmap/errors.hpp"
#include "ndmap/experiments.hpp"
#include "ndmap/spectrum.hpp"

using namespace ndmap;

namespace {

SweepOptions options_for(int J) {
  SweepOptions options;
  options.J = J;
  return options;
}

}  // namespace

TEST_CASE("make_grid") {
  const auto grid = make_grid(-10, 200, 1);
  CHECK(grid.size() == 211);
  CHECK(grid.front() == -10.0);
  CHECK(grid.back() == 200.0);
  CHECK(make_grid(0, 1, 0.1).size() == 11);
  CHECK_THROWS_AS(make_grid(0, 1, 0), PreconditionError);
  CHECK_THROWS_AS(make_grid(1, 0, 1), PreconditionError);
}

TEST_CASE("sweep examples") {
  const double bs[] = {5.0, -10.0, 0.0};
  const auto points = sweep(-10, bs, options_for(100));
  REQUIRE(points.size() == 3);

  REQUIRE_FALSE(points[0].skipped());
  const auto& r = *points[0].report;
  CHECK(r.b == 5.0);
  CHECK(r.theoretical_bound == 1);
  CHECK(r.measured_negative >= 0);
  CHECK(r.measured_negative <= 1);
  CHECK(r.J == 100);

  REQUIRE_FALSE(points[1].skipped());
  CHECK(points[1].report->theoretical_bound == 0);
  CHECK(points[1].report->measured_negative == 0);
  CHECK(points[1].report->min_eigenvalue == 0.0);
  CHECK(points[1].report->max_eigenvalue == 0.0);

  CHECK(points[2].skipped());
  CHECK(points[2].b == 0.0);
}

TEST_CASE("sweep errors") {
  const double bs[] = {1.0};
  CHECK_THROWS_AS(sweep(0.0, bs, options_for(4)), ResonanceError);
  const double below[] = {-20.0};
  CHECK_THROWS_AS(sweep(-10, below, options_for(4)), PreconditionError);
  SweepOptions bad = options_for(4);
  bad.delta = 0;
  CHECK_THROWS_AS(sweep(-10, bs, bad), PreconditionError);
}

TEST_CASE("sweep bound inequality and monotone bound along b") {
  const auto grid = make_grid(-9, 120, 1);
  const auto points = sweep(-10, grid, options_for(40));
  std::int64_t previous = 0;
  int skipped = 0;
  for (const auto& p : points) {
    if (p.skipped()) {
      ++skipped;
      continue;
    }
    CHECK(p.report->measured_negative <= p.report->theoretical_bound);
    CHECK(p.report->theoretical_bound >= previous);
    previous = p.report->theoretical_bound;
  }
  CHECK(skipped == 1);  // b = 0; the other pi^2 n are not integers
}

TEST_CASE("sweep output order is independent of the thread count") {
  const auto grid = make_grid(-9, 30, 1);
  SweepOptions serial = options_for(20);
  serial.threads = 1;
  SweepOptions threaded = serial;
  threaded.threads = 4;
  const auto x = sweep(-10, grid, serial);
  const auto y = sweep(-10, grid, threaded);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].b == y[i].b);
    CHECK(x[i].skipped() == y[i].skipped());
    if (!x[i].skipped()) {
      CHECK(x[i].report->measured_negative == y[i].report->measured_negative);
      CHECK(x[i].report->min_eigenvalue == y[i].report->min_eigenvalue);
      CHECK(x[i].report->max_eigenvalue == y[i].report->max_eigenvalue);
    }
  }
}

TEST_CASE("trajectories examples") {
  const double bs[] = {-10.0, -9.0, 0.0, 20.0};
  const auto points = trajectories(-10, bs, options_for(50));
  REQUIRE(points.size() == 4);
  for (const auto& p : points) {
    if (!p.skipped) {
      CHECK(p.eigenvalues.size() == 200);
    }
  }
  for (double v : points[0].eigenvalues) CHECK(v == 0.0);
  for (double v : points[1].eigenvalues) CHECK(v >= -1e-5);
  CHECK(bound_delta(-10, -9, 1) == 0);
  CHECK(points[2].skipped);
  CHECK(points[2].eigenvalues.empty());
  CHECK(points[3].eigenvalues.back() < -1e-5);
  for (std::size_t i = 1; i < points[3].eigenvalues.size(); ++i) {
    CHECK(points[3].eigenvalues[i - 1] >= points[3].eigenvalues[i]);
  }
}

TEST_CASE("verify_crossing examples") {
  const auto five = verify_crossing(5, 0.1, options_for(100));
  CHECK(five.expected == 2);
  CHECK(five.measured == 2);
  CHECK(five.agrees());
  REQUIRE(five.attempts.size() == 1);
  CHECK(five.attempts[0].eps == 0.1);

  CHECK(verify_crossing(0, 0.1, options_for(100)).expected == 1);
  CHECK(verify_crossing(25, 0.05, options_for(100)).expected == 4);
}

TEST_CASE("verify_crossing preconditions") {
  // 3 is not a sum of two squares.
  CHECK_THROWS_AS(verify_crossing(3, 0.1, options_for(10)), PreconditionError);
  // pi^2 * 4 and pi^2 * 5 are 9.87 apart; a window of +-10 holds both.
  CHECK_THROWS_AS(verify_crossing(4, 10.0, options_for(10)), PreconditionError);
  CHECK_THROWS_AS(verify_crossing(4, 0.0, options_for(10)), PreconditionError);
}
