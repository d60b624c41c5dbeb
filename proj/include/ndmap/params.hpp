#pragma once

#include <cstdint>

namespace ndmap {

// Absolute tolerance (in units of a*k^2) for declaring a resonance.
inline constexpr double kDefaultGuard = 1e-9;

// Eigenvalues below -delta count as negative.
inline constexpr double kDefaultDelta = 1e-5;

/// Lattice pair (l, m) indexing the Neumann eigenmode
/// d_l d_m cos(pi l x) cos(pi m y) of the unit square.
struct ModeIndex {
  std::int64_t l = 0;
  std::int64_t m = 0;

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// Configuration shared by every matrix-level operation.
///
/// `k` is the wavenumber, `a` the constant coefficient and `J` the number of
/// cosine modes per side of the square, so matrices are 4J x 4J. `guard` is
/// the resonance tolerance applied to a*k^2.
struct ProblemParams {
  double k = 1.0;
  double a = 0.0;
  int J = 1;
  double guard = kDefaultGuard;

  int size() const { return 4 * J; }

  // Same configuration with a different coefficient.
  ProblemParams with_a(double new_a) const {
    ProblemParams p = *this;
    p.a = new_a;
    return p;
  }

  ProblemParams with_J(int new_J) const {
    ProblemParams p = *this;
    p.J = new_J;
    return p;
  }
};

// Throws PreconditionError unless k > 0, J >= 1 and guard > 0.
void validate(const ProblemParams& params);

}  // namespace ndmap
