#pragma once

#include <cstdint>
#include <vector>

#include "ndmap/params.hpp"

namespace ndmap {

// Coefficient c_{l,m} of S(b) - S(a) in the Neumann eigenbasis.
struct DeltaCoefficient {
  ModeIndex mode;
  double value = 0;
};

// Eigenvalue 1 / (1 + pi^2 (l^2 + m^2)) of K = iota^* iota on H^1.
double k_eigenvalue(const ModeIndex& mode);

/// 1/(1 - (1 + b k^2) lambda) - 1/(1 - (1 + a k^2) lambda), lambda the K
/// eigenvalue of `mode`. Throws ResonanceError for resonant a or b.
double s_delta_coeff(const ModeIndex& mode, double a, double b, double k,
                     double guard = kDefaultGuard);

// All coefficients with l, m <= mode_cutoff, ordered by (l, m).
std::vector<DeltaCoefficient> delta_coefficients(double a, double b, double k,
                                                 std::int64_t mode_cutoff,
                                                 double guard = kDefaultGuard);

/// Number of negative coefficients among modes l, m <= mode_cutoff, which is
/// the exact negative-eigenvalue count of S(b) - S(a). Requires a <= b and
/// pi^2 cutoff^2 > b k^2 so every sign change lies inside the window.
std::int64_t exact_negative_count(double a, double b, double k,
                                  std::int64_t mode_cutoff,
                                  double guard = kDefaultGuard);

}  // namespace ndmap
