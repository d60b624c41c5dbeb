#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ndmap/linalg.hpp"
#include "ndmap/params.hpp"

namespace ndmap {

enum class AssemblyMethod { closed_form, series_oracle };

enum class Block { M0, M1, M2, M3 };

enum class SeriesKind { plain, alternating };

// Side index p of the boundary basis g_{4j+p}.
enum Side : int { right = 0, top = 1, left = 2, bottom = 3 };

/// One (i, j) entry of a 4x4 block pattern.
struct BlockEntrySpec {
  std::int64_t i = 0;
  std::int64_t j = 0;
  Block block = Block::M0;
};

/// Truncated Neumann-to-Dirichlet matrix for Lambda(a) in the boundary cosine
/// basis. Row/column s = 4j + p is mode j on side p (right, top, left,
/// bottom). Immutable after construction.
class NdMatrix {
 public:
  NdMatrix(Matrix entries, ProblemParams params, AssemblyMethod method,
           int series_cutoff = 0);

  const Matrix& entries() const { return entries_; }
  const ProblemParams& params() const { return params_; }
  AssemblyMethod method() const { return method_; }
  // Zero for closed-form assembly.
  int series_cutoff() const { return series_cutoff_; }
  Eigen::Index size() const { return entries_.rows(); }

  double operator()(Eigen::Index s, Eigen::Index t) const {
    return entries_(s, t);
  }

  // "closed_form" or "series_oracle:<cutoff>".
  std::string method_name() const;

 private:
  Matrix entries_;
  ProblemParams params_;
  AssemblyMethod method_;
  int series_cutoff_;
};

// d_0 = 1, d_j = sqrt(2) otherwise.
double normalizer(std::int64_t j);

/// Closed form of sum_m d_m^2 / (pi^2 m^2 + c) (plain) or of the series with
/// an extra (-1)^m (alternating):
///   c > 0: coth(sqrt c)/sqrt c, csch(sqrt c)/sqrt c
///   c < 0: -cot(sqrt -c)/sqrt -c, -csc(sqrt -c)/sqrt -c
/// Throws ResonanceError when |c| < guard or -c is within guard of pi^2 n^2.
double sum_formula(SeriesKind kind, double c, double guard = kDefaultGuard);

double m0_entry(std::int64_t i, double a, double k,
                double guard = kDefaultGuard);
double m1_entry(std::int64_t i, std::int64_t j, double a, double k,
                double guard = kDefaultGuard);
double m2_entry(std::int64_t i, double a, double k,
                double guard = kDefaultGuard);
double m3_entry(std::int64_t i, std::int64_t j, double a, double k,
                double guard = kDefaultGuard);

// Value of the given block at (i, j); M0 and M2 vanish off the diagonal.
double block_entry(const BlockEntrySpec& spec, double a, double k,
                   double guard = kDefaultGuard);

// Block selected by row side p and column side r: offset (r - p) mod 4.
Block block_for_sides(int p, int r);

/// Closed-form assembly. Throws ResonanceError before allocating anything if
/// params.a is resonant.
NdMatrix assemble(const ProblemParams& params);

/// I_p(j, l, m): integral of g_{4j+p} against the trace of v_{l,m}.
double overlap_integral(int p, std::int64_t j, const ModeIndex& mode);

/// Brute-force assembly from the truncated double series
///   sum_{l,m <= cutoff} I_p(i,l,m) I_r(j,l,m) / (pi^2 (l^2+m^2) - a k^2)
/// with compensated accumulation per entry. Requires series_cutoff >= J.
NdMatrix assemble_series_oracle(const ProblemParams& params, int series_cutoff);

/// Plain-text dump: header "4J k a method", then 4J rows of entries, each
/// real printed with 17 significant digits.
void write_dump(std::ostream& out, const NdMatrix& matrix);

struct MatrixDump {
  int size = 0;
  double k = 0;
  double a = 0;
  std::string method;
  Matrix entries;
};

// Parses the write_dump format; throws std::runtime_error on malformed input.
MatrixDump read_dump(std::istream& in);

}  // namespace ndmap
