#include "ndmap/solution_op.hpp"

#include <cmath>
#include <numbers>

#include "ndmap/errors.hpp"
#include "ndmap/spectrum.hpp"

namespace ndmap {
namespace {

void require_non_resonant(double q, double k, double guard) {
  if (is_resonant(q, k, guard)) {
    throw ResonanceError("resonance: coefficient " + std::to_string(q) +
                         " makes a*k^2 a Neumann eigenvalue");
  }
}

double resolvent(double q, double k, double lambda) {
  return 1.0 / (1.0 - (1.0 + q * k * k) * lambda);
}

}  // namespace

double k_eigenvalue(const ModeIndex& mode) {
  return 1.0 / (1.0 + neumann_eigenvalue(mode));
}

double s_delta_coeff(const ModeIndex& mode, double a, double b, double k,
                     double guard) {
  require_non_resonant(a, k, guard);
  require_non_resonant(b, k, guard);
  const double lambda = k_eigenvalue(mode);
  return resolvent(b, k, lambda) - resolvent(a, k, lambda);
}

std::vector<DeltaCoefficient> delta_coefficients(double a, double b, double k,
                                                 std::int64_t mode_cutoff,
                                                 double guard) {
  if (mode_cutoff < 0) throw PreconditionError("mode cutoff must be >= 0");
  require_non_resonant(a, k, guard);
  require_non_resonant(b, k, guard);
  std::vector<DeltaCoefficient> out;
  out.reserve(static_cast<std::size_t>((mode_cutoff + 1) * (mode_cutoff + 1)));
  for (std::int64_t l = 0; l <= mode_cutoff; ++l) {
    for (std::int64_t m = 0; m <= mode_cutoff; ++m) {
      const double lambda = k_eigenvalue({l, m});
      out.push_back({{l, m}, resolvent(b, k, lambda) - resolvent(a, k, lambda)});
    }
  }
  return out;
}

std::int64_t exact_negative_count(double a, double b, double k,
                                  std::int64_t mode_cutoff, double guard) {
  if (a > b) throw PreconditionError("exact_negative_count requires a <= b");
  if (mode_cutoff < 1) throw PreconditionError("mode cutoff must be positive");
  const double cutoff = static_cast<double>(mode_cutoff);
  if (std::numbers::pi * std::numbers::pi * cutoff * cutoff <= b * k * k) {
    throw PreconditionError(
        "mode cutoff too small: pi^2 cutoff^2 must exceed b k^2");
  }
  std::int64_t negatives = 0;
  for (const auto& c : delta_coefficients(a, b, k, mode_cutoff, guard)) {
    if (c.value < 0.0) ++negatives;
  }
  return negatives;
}

}  // namespace ndmap
