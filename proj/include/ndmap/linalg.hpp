#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ndmap/params.hpp"

namespace ndmap {

using Matrix = Eigen::MatrixXd;

/// Sorted spectrum of a symmetric matrix plus its negative count under delta.
struct SpectrumReport {
  std::vector<double> eigenvalues;  // descending
  double tolerance = kDefaultDelta;
  int negative_count = 0;
};

// Throws PreconditionError unless `matrix` is square and
// |A(s,t) - A(t,s)| <= rel_tol * max(1, |A(s,t)|, |A(t,s)|).
void require_symmetric(const Matrix& matrix, double rel_tol = 1e-10);

/// All eigenvalues of a symmetric matrix with multiplicity, descending.
std::vector<double> sym_eigenvalues(const Matrix& matrix);

/// #{lambda : lambda < -delta}. Requires delta > 0.
int count_negative(std::span<const double> eigenvalues, double delta);

/// Largest |eigenvalue|, i.e. the operator 2-norm of a symmetric matrix.
double spectral_norm(const Matrix& matrix);

SpectrumReport spectrum_report(const Matrix& matrix,
                               double delta = kDefaultDelta);

/// Embeds `small` in the upper-left corner of a size x size zero matrix.
/// With the s = 4j + p basis ordering the first 4J' indices are exactly the
/// modes j < J' on every side, so this is the interleaved zero-padding.
Matrix zero_pad(const Matrix& small, Eigen::Index size);

/// Spectral-norm distance between the ND matrix at J and the zero-padded
/// matrix at J/2. Requires even J.
double truncation_error(const ProblemParams& params);

/// Same estimate applied to the difference Lambda(b) - Lambda(a).
/// `params.a` is a; requires even J.
double truncation_error_difference(const ProblemParams& params, double b);

}  // namespace ndmap
