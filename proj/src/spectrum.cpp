#include "ndmap/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "ndmap/errors.hpp"

namespace ndmap {
namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

// Smallest radius R with pi^2 R^2 >= max(x, 0).
std::int64_t cover_radius(double x) {
  if (x <= 0.0) return 0;
  return static_cast<std::int64_t>(std::ceil(std::sqrt(x) / std::numbers::pi));
}

void require_positive_k(double k) {
  if (!(k > 0.0)) throw PreconditionError("wavenumber k must be positive");
}

void require_non_resonant(double a, double k, double guard) {
  if (is_resonant(a, k, guard)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "resonance: a*k^2 = " << a * k * k
        << " is a Neumann eigenvalue pi^2(l^2+m^2) within guard "
        << std::setprecision(6) << guard;
    throw ResonanceError(msg.str());
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

double neumann_eigenvalue(const ModeIndex& mode) {
  const auto l = static_cast<double>(mode.l);
  const auto m = static_cast<double>(mode.m);
  return kPi2 * (l * l + m * m);
}

bool is_resonant(double a, double k, double guard) {
  if (!(guard > 0.0)) throw PreconditionError("guard must be positive");
  require_positive_k(k);
  const double x = a * k * k;
  if (x < -guard) return false;
  const std::int64_t radius = cover_radius(x) + 1;
  for (std::int64_t l = 0; l <= radius; ++l) {
    for (std::int64_t m = 0; m <= radius; ++m) {
      if (std::abs(x - neumann_eigenvalue({l, m})) < guard) return true;
    }
  }
  return false;
}

std::int64_t count_d(double a, double k, double guard) {
  require_non_resonant(a, k, guard);
  const double x = a * k * k;
  const std::int64_t radius = cover_radius(x);
  std::int64_t count = 0;
  for (std::int64_t l = 0; l <= radius; ++l) {
    for (std::int64_t m = 0; m <= radius; ++m) {
      if (neumann_eigenvalue({l, m}) < x) ++count;
    }
  }
  return count;
}

std::int64_t multiplicity(std::uint64_t n) {
  std::int64_t count = 0;
  const std::uint64_t root = isqrt(n);
  for (std::uint64_t l = 0; l <= root; ++l) {
    const std::uint64_t rest = n - l * l;
    const std::uint64_t m = isqrt(rest);
    if (m * m == rest) ++count;
  }
  return count;
}

std::vector<ModeIndex> modes_in_window(double lo, double hi,
                                       std::int64_t radius) {
  std::vector<ModeIndex> modes;
  for (std::int64_t l = 0; l <= radius; ++l) {
    for (std::int64_t m = 0; m <= radius; ++m) {
      const double ev = neumann_eigenvalue({l, m});
      if (lo < ev && ev < hi) modes.push_back({l, m});
    }
  }
  return modes;
}

std::int64_t bound_delta(double a, double b, double k, double guard) {
  if (a > b) throw PreconditionError("bound_delta requires a <= b");
  require_non_resonant(a, k, guard);
  require_non_resonant(b, k, guard);
  const double lo = a * k * k;
  const double hi = b * k * k;
  return static_cast<std::int64_t>(
      modes_in_window(lo, hi, cover_radius(hi) + 1).size());
}

std::uint64_t construct_even_multiplicity(int N) {
  if (N < 2 || N % 2 != 0) {
    throw PreconditionError("multiplicity construction needs an even N >= 2");
  }
  if (N > 16) {
    throw PreconditionError("multiplicity construction supports N <= 16");
  }
  std::uint64_t n = 1;
  for (int r = 0; r < N - 1; ++r) n *= 5;
  if (multiplicity(n) != N) {
    throw std::logic_error("5^(N-1) failed the multiplicity check");
  }
  return n;
}

}  // namespace ndmap
