#pragma once

#include <cstdint>
#include <vector>

#include "ndmap/params.hpp"

namespace ndmap {

// Eigenvalue pi^2 (l^2 + m^2) of -Laplace with Neumann conditions.
double neumann_eigenvalue(const ModeIndex& mode);

/// True iff a*k^2 lies within `guard` of some pi^2 (l^2 + m^2).
bool is_resonant(double a, double k, double guard = kDefaultGuard);

/// Number of modes with pi^2 (l^2 + m^2) < a k^2, i.e. the number of positive
/// Neumann eigenvalues of Laplace + k^2 a. Throws ResonanceError when a k^2
/// is resonant.
std::int64_t count_d(double a, double k, double guard = kDefaultGuard);

/// Number of ordered pairs (l, m) in N_0^2 with l^2 + m^2 = n.
std::int64_t multiplicity(std::uint64_t n);

/// Direct lattice count of a k^2 < pi^2 (l^2 + m^2) < b k^2, which equals
/// count_d(b, k) - count_d(a, k). Requires a <= b and non-resonant endpoints.
std::int64_t bound_delta(double a, double b, double k,
                         double guard = kDefaultGuard);

/// Returns 5^(N-1), whose multiplicity is exactly N, for even N >= 2. The
/// result is checked by enumeration before returning. N is capped at 16 so
/// the check stays cheap.
std::uint64_t construct_even_multiplicity(int N);

// All modes with l, m <= radius whose eigenvalue lies in the open window
// (lo, hi), ordered by (l, m).
std::vector<ModeIndex> modes_in_window(double lo, double hi,
                                       std::int64_t radius);

}  // namespace ndmap
