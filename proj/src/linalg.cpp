#include "ndmap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ndmap/errors.hpp"
#include "ndmap/nd_matrix.hpp"

namespace ndmap {

void require_symmetric(const Matrix& matrix, double rel_tol) {
  if (matrix.rows() != matrix.cols()) {
    throw PreconditionError("matrix must be square");
  }
  const Eigen::Index n = matrix.rows();
  for (Eigen::Index s = 0; s < n; ++s) {
    for (Eigen::Index t = s + 1; t < n; ++t) {
      const double x = matrix(s, t);
      const double y = matrix(t, s);
      const double scale = std::max({1.0, std::abs(x), std::abs(y)});
      if (!(std::abs(x - y) <= rel_tol * scale)) {
        throw PreconditionError("matrix is not symmetric");
      }
    }
  }
}

std::vector<double> sym_eigenvalues(const Matrix& matrix) {
  require_symmetric(matrix);
  if (matrix.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int count_negative(std::span<const double> eigenvalues, double delta) {
  if (!(delta > 0.0)) throw PreconditionError("delta must be positive");
  return static_cast<int>(std::count_if(
      eigenvalues.begin(), eigenvalues.end(),
      [delta](double lambda) { return lambda < -delta; }));
}

double spectral_norm(const Matrix& matrix) {
  const auto ev = sym_eigenvalues(matrix);
  if (ev.empty()) return 0.0;
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

SpectrumReport spectrum_report(const Matrix& matrix, double delta) {
  SpectrumReport report;
  report.eigenvalues = sym_eigenvalues(matrix);
  report.tolerance = delta;
  report.negative_count = count_negative(report.eigenvalues, delta);
  return report;
}

Matrix zero_pad(const Matrix& small, Eigen::Index size) {
  if (small.rows() > size || small.cols() > size) {
    throw PreconditionError("zero_pad target is smaller than the input");
  }
  Matrix out = Matrix::Zero(size, size);
  out.topLeftCorner(small.rows(), small.cols()) = small;
  return out;
}

namespace {

void require_even_J(const ProblemParams& params) {
  if (params.J % 2 != 0) {
    throw PreconditionError("truncation estimate needs an even J");
  }
}

}  // namespace

double truncation_error(const ProblemParams& params) {
  validate(params);
  require_even_J(params);
  const NdMatrix full = assemble(params);
  const NdMatrix half = assemble(params.with_J(params.J / 2));
  return spectral_norm(full.entries() - zero_pad(half.entries(), full.size()));
}

double truncation_error_difference(const ProblemParams& params, double b) {
  validate(params);
  require_even_J(params);
  const ProblemParams half = params.with_J(params.J / 2);
  const Matrix full_diff =
      assemble(params.with_a(b)).entries() - assemble(params).entries();
  const Matrix half_diff =
      assemble(half.with_a(b)).entries() - assemble(half).entries();
  return spectral_norm(full_diff - zero_pad(half_diff, full_diff.rows()));
}

}  // namespace ndmap
