#pragma once

// Dense complex linear algebra used throughout: roots of unity, subspaces
// with orthonormal bases, Hermitian eigenspace splitting, linear solves and
// kernels. Eigen does the heavy lifting.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qrep/errors.hpp"
#include "qrep/tolerance.hpp"

namespace qrep {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// omega_k^power with omega_k = exp(2 pi i / k). Quarter turns are exact.
inline Scalar root_of_unity(std::int64_t k, std::int64_t power) {
  if (k <= 0) throw domain_error("root_of_unity: order must be positive");
  std::int64_t p = power % k;
  if (p < 0) p += k;
  if ((4 * p) % k == 0) {
    switch ((4 * p) / k) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(k));
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_finite(const Matrix& m) {
  return m.allFinite();
}

/// Modified Gram-Schmidt with one re-orthogonalization pass. Columns whose
/// remaining norm falls below `drop_tol` are discarded, so the result spans
/// the same space as the input and has orthonormal columns.
inline Matrix orthonormalize(const Matrix& vectors, double drop_tol) {
  const Eigen::Index n = vectors.rows();
  std::vector<Vector> kept;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Vector v = vectors.col(j);
    const double scale = std::max(1.0, v.norm());
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : kept) v -= q * q.dot(v);
    }
    const double nrm = v.norm();
    if (nrm <= drop_tol * scale) continue;
    kept.push_back(v / nrm);
  }
  Matrix out(n, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = kept[j];
  return out;
}

/// A nonzero subspace of C^ambient_dim stored as an orthonormal column basis.
class Subspace {
 public:
  /// Span of the given columns; linearly dependent columns are dropped.
  static Subspace span(const Matrix& vectors, double drop_tol = 1e-9) {
    Matrix basis = orthonormalize(vectors, drop_tol);
    if (basis.cols() == 0) throw domain_error("Subspace: vectors span the zero space");
    return Subspace(std::move(basis));
  }

  static Subspace full(Eigen::Index ambient_dim) {
    if (ambient_dim <= 0) throw domain_error("Subspace: ambient dimension must be positive");
    return Subspace(Matrix::Identity(ambient_dim, ambient_dim));
  }

  std::size_t ambient_dim() const { return static_cast<std::size_t>(basis_.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }

  Matrix projector() const { return basis_ * basis_.adjoint(); }

  /// max |B^H B - I|
  double orthonormality_defect() const {
    const Eigen::Index k = basis_.cols();
    return max_abs(basis_.adjoint() * basis_ - Matrix::Identity(k, k));
  }

  /// Distance of `v` from the subspace, max-norm of (I - BB^H) v.
  double distance(const Vector& v) const {
    return max_abs(v - basis_ * (basis_.adjoint() * v));
  }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

struct EigenGroup {
  double eigenvalue;  // mean of the grouped eigenvalues
  Subspace space;
};

/// Eigenspaces of a Hermitian matrix, ascending by eigenvalue. Consecutive
/// eigenvalues closer than `tol` are merged into one group.
inline std::vector<EigenGroup> hermitian_eigensplit(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw contract_violation("hermitian_eigensplit: matrix is not square");
  if (m.rows() == 0) throw domain_error("hermitian_eigensplit: empty matrix");
  if (max_abs(m - m.adjoint()) > tol) {
    throw contract_violation("hermitian_eigensplit: matrix is not Hermitian within tolerance");
  }
  const Matrix h = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw unsupported("hermitian_eigensplit: eigensolver failed");
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  std::vector<EigenGroup> groups;
  Eigen::Index start = 0;
  const Eigen::Index n = h.rows();
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i < n && values(i) - values(i - 1) <= tol) continue;
    const Eigen::Index len = i - start;
    const double mean = values.segment(start, len).mean();
    groups.push_back({mean, Subspace::span(vectors.middleCols(start, len))});
    start = i;
  }
  return groups;
}

/// Solves a x = b. Returns nullopt when `a` is rank-deficient relative to
/// `tol`.
inline std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b, double tol = 1e-9) {
  if (a.rows() != a.cols()) throw domain_error("solve_linear: coefficient matrix is not square");
  if (b.rows() != a.rows()) throw domain_error("solve_linear: right-hand side has wrong row count");
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(tol);
  if (!lu.isInvertible()) return std::nullopt;
  return Matrix(lu.solve(b));
}

/// Orthonormal basis (as columns) of ker k, given only its Gram matrix
/// k^H k. Singular values of k at or below `cutoff` count as zero.
inline Matrix null_space_from_gram(const Matrix& gram, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
  if (solver.info() != Eigen::Success) throw unsupported("null_space: eigensolver failed");
  const auto& values = solver.eigenvalues();
  Eigen::Index count = 0;
  while (count < values.size() && values(count) <= cutoff * cutoff) ++count;
  return solver.eigenvectors().leftCols(count);
}

/// Works on k^H k, which is small whenever k is tall.
inline Matrix null_space(const Matrix& k, double cutoff) {
  return null_space_from_gram(k.adjoint() * k, cutoff);
}

/// Numerical rank, counting singular values above `cutoff`.
inline std::size_t rank(const Matrix& m, double cutoff) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  return static_cast<std::size_t>((sv.array() > cutoff).count());
}

/// Columns of `blocks` side by side.
inline Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix out(blocks.front().rows(), cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

}  // namespace qrep
