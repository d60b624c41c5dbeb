#include "ndmap/nd_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "ndmap/compensated_sum.hpp"
#include "ndmap/errors.hpp"
#include "ndmap/spectrum.hpp"

namespace ndmap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Beyond this argument coth is 1 to double precision and csch is 2 e^{-x}.
constexpr double kLargeArgument = 30.0;

double sign_of_power(std::int64_t e) { return (e % 2 == 0) ? 1.0 : -1.0; }

double coth(double x) {
  if (x > kLargeArgument) return 1.0;
  const double one_minus = -std::expm1(-2.0 * x);  // 1 - e^{-2x}
  return (2.0 - one_minus) / one_minus;
}

double csch(double x) {
  if (x > kLargeArgument) return 2.0 * std::exp(-x);
  return 2.0 * std::exp(-x) / -std::expm1(-2.0 * x);
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

[[noreturn]] void throw_resonance(const char* where, double value) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "resonance in " << where << ": " << value << " is within guard of a pole";
  throw ResonanceError(msg.str());
}

// pi^2 (i^2 + j^2) - a k^2, guarded against resonance.
double guarded_denominator(std::int64_t i, std::int64_t j, double a, double k,
                           double guard) {
  const double denom = neumann_eigenvalue({i, j}) - a * k * k;
  if (std::abs(denom) < guard) throw_resonance("off-diagonal block", denom);
  return denom;
}

void require_index(std::int64_t i) {
  if (i < 0) throw PreconditionError("mode indices must be nonnegative");
}

}  // namespace

NdMatrix::NdMatrix(Matrix entries, ProblemParams params, AssemblyMethod method,
                   int series_cutoff)
    : entries_(std::move(entries)),
      params_(params),
      method_(method),
      series_cutoff_(series_cutoff) {}

std::string NdMatrix::method_name() const {
  if (method_ == AssemblyMethod::closed_form) return "closed_form";
  return "series_oracle:" + std::to_string(series_cutoff_);
}

double normalizer(std::int64_t j) { return j == 0 ? 1.0 : kSqrt2; }

double sum_formula(SeriesKind kind, double c, double guard) {
  if (std::abs(c) < guard) throw_resonance("sum formula", c);
  if (c > 0.0) {
    const double x = std::sqrt(c);
    return (kind == SeriesKind::plain ? coth(x) : csch(x)) / x;
  }
  const double s = std::sqrt(-c);
  const double n = std::round(s / kPi);
  if (n >= 1.0 && std::abs(-c - kPi2 * n * n) < guard) {
    throw_resonance("sum formula", c);
  }
  const double sin_s = std::sin(s);
  if (kind == SeriesKind::plain) return -std::cos(s) / (sin_s * s);
  return -1.0 / (sin_s * s);
}

double m0_entry(std::int64_t i, double a, double k, double guard) {
  require_index(i);
  return sum_formula(SeriesKind::plain, neumann_eigenvalue({i, 0}) - a * k * k,
                     guard);
}

double m2_entry(std::int64_t i, double a, double k, double guard) {
  require_index(i);
  return sign_of_power(i) *
         sum_formula(SeriesKind::alternating,
                     neumann_eigenvalue({i, 0}) - a * k * k, guard);
}

double m1_entry(std::int64_t i, std::int64_t j, double a, double k,
                double guard) {
  require_index(i);
  require_index(j);
  return sign_of_power(i) * normalizer(i) * normalizer(j) /
         guarded_denominator(i, j, a, k, guard);
}

double m3_entry(std::int64_t i, std::int64_t j, double a, double k,
                double guard) {
  require_index(i);
  require_index(j);
  return sign_of_power(j) * normalizer(i) * normalizer(j) /
         guarded_denominator(i, j, a, k, guard);
}

double block_entry(const BlockEntrySpec& spec, double a, double k,
                   double guard) {
  switch (spec.block) {
    case Block::M0:
      return spec.i == spec.j ? m0_entry(spec.i, a, k, guard) : 0.0;
    case Block::M1:
      return m1_entry(spec.i, spec.j, a, k, guard);
    case Block::M2:
      return spec.i == spec.j ? m2_entry(spec.i, a, k, guard) : 0.0;
    case Block::M3:
      return m3_entry(spec.i, spec.j, a, k, guard);
  }
  return 0.0;
}

Block block_for_sides(int p, int r) {
  if (p < 0 || p > 3 || r < 0 || r > 3) {
    throw PreconditionError("side index must lie in 0..3");
  }
  return static_cast<Block>(((r - p) % 4 + 4) % 4);
}

NdMatrix assemble(const ProblemParams& params) {
  validate(params);
  if (is_resonant(params.a, params.k, params.guard)) {
    throw_resonance("assemble", params.a * params.k * params.k);
  }
  const Eigen::Index n = params.size();
  Matrix entries(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    for (Eigen::Index t = s; t < n; ++t) {
      const BlockEntrySpec spec{s / 4, t / 4,
                                block_for_sides(static_cast<int>(s % 4),
                                                static_cast<int>(t % 4))};
      const double value = block_entry(spec, params.a, params.k, params.guard);
      entries(s, t) = value;
      entries(t, s) = value;
    }
  }
  return NdMatrix(std::move(entries), params, AssemblyMethod::closed_form);
}

double overlap_integral(int p, std::int64_t j, const ModeIndex& mode) {
  require_index(j);
  require_index(mode.l);
  require_index(mode.m);
  const auto [l, m] = mode;
  switch (p) {
    case Side::right:
      return j == m ? sign_of_power(l) * normalizer(l) : 0.0;
    case Side::top:
      return j == l ? sign_of_power(m + j) * normalizer(m) : 0.0;
    case Side::left:
      return j == m ? sign_of_power(j) * normalizer(l) : 0.0;
    case Side::bottom:
      return j == l ? normalizer(m) : 0.0;
    default:
      throw PreconditionError("side index must lie in 0..3");
  }
}

NdMatrix assemble_series_oracle(const ProblemParams& params,
                                int series_cutoff) {
  validate(params);
  if (series_cutoff < params.J) {
    throw PreconditionError("series cutoff must be at least J");
  }
  if (is_resonant(params.a, params.k, params.guard)) {
    throw_resonance("assemble_series_oracle", params.a * params.k * params.k);
  }
  const int n = params.size();
  const double shift = params.a * params.k * params.k;
  std::vector<CompensatedSum<double>> acc(static_cast<std::size_t>(n) * n);
  std::vector<std::pair<int, double>> traces;
  traces.reserve(8);

  for (std::int64_t l = 0; l <= series_cutoff; ++l) {
    for (std::int64_t m = 0; m <= series_cutoff; ++m) {
      // Every I_p carries delta_{jl} or delta_{jm} with j < J.
      if (l >= params.J && m >= params.J) continue;
      traces.clear();
      for (int s = 0; s < n; ++s) {
        const double v = overlap_integral(s % 4, s / 4, {l, m});
        if (v != 0.0) traces.emplace_back(s, v);
      }
      const double weight = 1.0 / (neumann_eigenvalue({l, m}) - shift);
      for (const auto& [s, vs] : traces) {
        for (const auto& [t, vt] : traces) {
          if (t < s) continue;
          acc[static_cast<std::size_t>(s) * n + t] += weight * vs * vt;
        }
      }
    }
  }

  Matrix entries(n, n);
  for (int s = 0; s < n; ++s) {
    for (int t = s; t < n; ++t) {
      const double value = acc[static_cast<std::size_t>(s) * n + t].value();
      entries(s, t) = value;
      entries(t, s) = value;
    }
  }
  return NdMatrix(std::move(entries), params, AssemblyMethod::series_oracle,
                  series_cutoff);
}

void write_dump(std::ostream& out, const NdMatrix& matrix) {
  const Eigen::Index n = matrix.size();
  out << n << ' ' << format_real(matrix.params().k) << ' '
      << format_real(matrix.params().a) << ' ' << matrix.method_name() << '\n';
  for (Eigen::Index s = 0; s < n; ++s) {
    for (Eigen::Index t = 0; t < n; ++t) {
      if (t > 0) out << ' ';
      out << format_real(matrix(s, t));
    }
    out << '\n';
  }
}

MatrixDump read_dump(std::istream& in) {
  MatrixDump dump;
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty matrix dump");
  std::istringstream hs(header);
  if (!(hs >> dump.size >> dump.k >> dump.a >> dump.method) || dump.size < 0) {
    throw std::runtime_error("malformed matrix dump header: " + header);
  }
  dump.entries.resize(dump.size, dump.size);
  for (int s = 0; s < dump.size; ++s) {
    for (int t = 0; t < dump.size; ++t) {
      if (!(in >> dump.entries(s, t))) {
        throw std::runtime_error("matrix dump truncated");
      }
    }
  }
  return dump;
}

}  // namespace ndmap
