#include "ndmap/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "ndmap/errors.hpp"
#include "ndmap/linalg.hpp"
#include "ndmap/nd_matrix.hpp"
#include "ndmap/spectrum.hpp"

namespace ndmap {
namespace {

ProblemParams base_params(double a, const SweepOptions& options) {
  ProblemParams params{options.k, a, options.J, options.guard};
  validate(params);
  if (!(options.delta > 0.0)) throw PreconditionError("delta must be positive");
  return params;
}

// Runs body(i) for i in [0, count); each index writes only its own slot, so
// results do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += threads) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void require_b_not_below_a(double a, std::span<const double> b_values) {
  for (double b : b_values) {
    if (b < a) {
      std::ostringstream msg;
      msg << "sweep values must satisfy b >= a (a = " << a << ", b = " << b
          << ")";
      throw PreconditionError(msg.str());
    }
  }
}

void require_non_resonant_a(const ProblemParams& params) {
  if (is_resonant(params.a, params.k, params.guard)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "resonance: reference coefficient a = " << params.a
        << " is a Neumann eigenvalue";
    throw ResonanceError(msg.str());
  }
}

int negatives_between(double lo, double hi, const ProblemParams& params,
                      double delta) {
  const Matrix diff = assemble(params.with_a(hi)).entries() -
                      assemble(params.with_a(lo)).entries();
  return count_negative(sym_eigenvalues(diff), delta);
}

}  // namespace

std::vector<double> make_grid(double b_min, double b_max, double step) {
  if (!(step > 0.0)) throw PreconditionError("grid step must be positive");
  if (b_max < b_min) throw PreconditionError("grid needs b_max >= b_min");
  const auto count =
      static_cast<std::size_t>(std::floor((b_max - b_min) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = b_min + static_cast<double>(i) * step;
  }
  return grid;
}

std::vector<SweepPoint> sweep(double a, std::span<const double> b_values,
                              const SweepOptions& options) {
  const ProblemParams params = base_params(a, options);
  require_non_resonant_a(params);
  require_b_not_below_a(a, b_values);

  const NdMatrix reference = assemble(params);
  std::vector<SweepPoint> out(b_values.size());
  parallel_for(b_values.size(), options.threads, [&](std::size_t i) {
    const double b = b_values[i];
    out[i].b = b;
    if (is_resonant(b, params.k, params.guard)) return;
    const Matrix diff = assemble(params.with_a(b)).entries() - reference.entries();
    const auto ev = sym_eigenvalues(diff);
    BoundReport report;
    report.a = a;
    report.b = b;
    report.k = params.k;
    report.J = params.J;
    report.delta = options.delta;
    report.measured_negative = count_negative(ev, options.delta);
    report.theoretical_bound = bound_delta(a, b, params.k, params.guard);
    report.max_eigenvalue = ev.front();
    report.min_eigenvalue = ev.back();
    out[i].report = report;
  });
  return out;
}

std::vector<TrajectoryPoint> trajectories(double a,
                                          std::span<const double> b_values,
                                          const SweepOptions& options) {
  const ProblemParams params = base_params(a, options);
  require_non_resonant_a(params);
  require_b_not_below_a(a, b_values);

  const NdMatrix reference = assemble(params);
  std::vector<TrajectoryPoint> out(b_values.size());
  parallel_for(b_values.size(), options.threads, [&](std::size_t i) {
    const double b = b_values[i];
    out[i].b = b;
    if (is_resonant(b, params.k, params.guard)) {
      out[i].skipped = true;
      return;
    }
    out[i].eigenvalues =
        sym_eigenvalues(assemble(params.with_a(b)).entries() - reference.entries());
  });
  return out;
}

CrossingReport verify_crossing(std::uint64_t n, double eps,
                               const SweepOptions& options) {
  if (!(eps > 0.0)) throw PreconditionError("eps must be positive");
  const std::int64_t expected = multiplicity(n);
  if (expected == 0) {
    throw PreconditionError("n = " + std::to_string(n) +
                            " is not a sum of two squares");
  }
  const double center =
      std::numbers::pi * std::numbers::pi * static_cast<double>(n) /
      (options.k * options.k);
  const ProblemParams params = base_params(center, options);

  CrossingReport report;
  report.n = n;
  report.center = center;
  report.expected = expected;

  auto attempt = [&](double window) {
    const double lo = center - window;
    const double hi = center + window;
    if (bound_delta(lo, hi, params.k, params.guard) != expected) {
      std::ostringstream msg;
      msg << "crossing window of half-width " << window
          << " contains another Neumann eigenvalue";
      throw PreconditionError(msg.str());
    }
    const int measured = negatives_between(lo, hi, params, options.delta);
    report.attempts.push_back({window, measured});
    report.measured = measured;
  };

  attempt(eps);
  if (!report.agrees()) attempt(eps / 2.0);
  return report;
}

}  // namespace ndmap
