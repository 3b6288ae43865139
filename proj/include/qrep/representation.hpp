#pragma once

// Quandle representations x -> rho(x) in GL(d, C) with
// rho(x * y) = rho(y) rho(x) rho(y)^-1.

#include <algorithm>
#include <set>
#include <vector>

#include <Eigen/Sparse>

#include "qrep/errors.hpp"
#include "qrep/linalg.hpp"
#include "qrep/permutation_group.hpp"
#include "qrep/quandle.hpp"
#include "qrep/tolerance.hpp"

namespace qrep {

class Representation {
 public:
  /// Checks shapes, invertibility and the representation axiom to `eps`
  /// (scaled by the largest entry). Throws domain_error on failure.
  Representation(FiniteQuandle q, std::vector<Matrix> rho, double eps = Tolerances{}.eps)
      : quandle_(std::move(q)), rho_(std::move(rho)) {
    if (rho_.size() != quandle_.size()) throw domain_error("Representation: need one matrix per element");
    const Eigen::Index d = rho_.front().rows();
    if (d == 0) throw domain_error("Representation: dimension must be positive");
    double scale = 1.0;
    for (const auto& m : rho_) {
      if (m.rows() != d || m.cols() != d) throw domain_error("Representation: matrices must be square of equal size");
      if (!m.allFinite()) throw domain_error("Representation: non-finite entry");
      scale = std::max(scale, max_abs(m));
    }
    for (const auto& m : rho_) {
      Eigen::FullPivLU<Matrix> lu(m);
      if (!lu.isInvertible()) throw domain_error("Representation: rho(x) is not invertible");
    }
    if (axiom_residual() > eps * scale * scale * static_cast<double>(d)) {
      throw domain_error("Representation: rho(x*y) != rho(y) rho(x) rho(y)^-1");
    }
  }

  const FiniteQuandle& quandle() const { return quandle_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.front().rows()); }
  const Matrix& operator()(Element x) const { return rho_.at(x); }
  const std::vector<Matrix>& matrices() const { return rho_; }

  /// max over x, y of |rho(x*y) rho(y) - rho(y) rho(x)|.
  double axiom_residual() const {
    double worst = 0.0;
    const std::size_t n = quandle_.size();
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        worst = std::max(worst, max_abs(rho_[quandle_(x, y)] * rho_[y] - rho_[y] * rho_[x]));
    return worst;
  }

  bool is_unitary(double eps) const {
    const auto d = static_cast<Eigen::Index>(dim());
    for (const auto& m : rho_)
      if (max_abs(m.adjoint() * m - Matrix::Identity(d, d)) > eps) return false;
    return true;
  }

  /// max over x of |(I - BB^H) rho(x) B|.
  double invariance_residual(const Subspace& s) const {
    if (s.ambient_dim() != dim()) throw domain_error("invariance check: subspace lives in the wrong space");
    const Matrix& b = s.basis();
    double worst = 0.0;
    for (const auto& m : rho_) {
      const Matrix image = m * b;
      worst = std::max(worst, max_abs(image - b * (b.adjoint() * image)));
    }
    return worst;
  }

  /// The representation on an invariant subspace, in its orthonormal basis:
  /// x -> B^H rho(x) B.
  Representation restricted(const Subspace& s, double eps = Tolerances{}.eps) const {
    if (invariance_residual(s) > eps) throw contract_violation("restricted: subspace is not invariant");
    std::vector<Matrix> small;
    small.reserve(rho_.size());
    for (const auto& m : rho_) small.push_back(s.basis().adjoint() * m * s.basis());
    return Representation(quandle_, std::move(small), eps);
  }

 private:
  FiniteQuandle quandle_;
  std::vector<Matrix> rho_;
};

/// rho(t) e_x = e_{x * t}.
inline Representation regular_representation(const FiniteQuandle& q) {
  const auto n = static_cast<Eigen::Index>(q.size());
  std::vector<Matrix> rho;
  rho.reserve(q.size());
  for (Element t = 0; t < q.size(); ++t) {
    Matrix p = Matrix::Zero(n, n);
    for (Element x = 0; x < q.size(); ++x) p(static_cast<Eigen::Index>(q(x, t)), static_cast<Eigen::Index>(x)) = 1.0;
    rho.push_back(std::move(p));
  }
  return Representation(q, std::move(rho));
}

/// Quandle representation x -> phi(R_x) induced by a group representation
/// phi of Inn(q), given by its values on the generators R_g, g in `gens`.
/// Every group element gets the product of images along its stored word;
/// the images must respect every relation (checked edge by edge on the
/// Cayley graph).
inline Representation induced_representation(const FiniteQuandle& q, const std::vector<Element>& gens,
                                             const std::vector<Matrix>& images, double eps = Tolerances{}.eps) {
  if (gens.empty() || gens.size() != images.size())
    throw domain_error("induced_representation: need one image per generator");
  if (std::set<Element>(gens.begin(), gens.end()).size() != gens.size())
    throw domain_error("induced_representation: repeated generator label");
  for (Element g : gens)
    if (g >= q.size()) throw domain_error("induced_representation: generator label out of range");
  const Eigen::Index d = images.front().rows();
  for (const auto& m : images)
    if (m.rows() != d || m.cols() != d) throw domain_error("induced_representation: images must be square of equal size");

  const PermutationGroup group = generated_group(q, gens);
  auto image_of = [&](Element label) -> const Matrix& {
    const auto it = std::find(gens.begin(), gens.end(), label);
    return images[static_cast<std::size_t>(it - gens.begin())];
  };

  std::vector<Matrix> value;
  value.reserve(group.order());
  for (const auto& w : group.words()) {
    Matrix m = Matrix::Identity(d, d);
    for (Element label : w) m = m * image_of(label);
    value.push_back(std::move(m));
  }

  for (std::size_t i = 0; i < group.order(); ++i) {
    for (const auto& g : group.generators()) {
      const std::size_t j = *group.index_of(group.elements()[i].compose(g.perm));
      const Matrix& lhs = value[i];
      const double scale = std::max({1.0, max_abs(lhs), max_abs(value[j])});
      if (max_abs(lhs * image_of(g.label) - value[j]) > eps * scale * static_cast<double>(d)) {
        throw domain_error("induced_representation: images violate a relation of the generated group");
      }
    }
  }

  std::vector<Matrix> rho;
  rho.reserve(q.size());
  for (Element x = 0; x < q.size(); ++x) {
    const auto idx = group.index_of(right_translation(q, x));
    if (!idx) throw domain_error("induced_representation: generators do not generate Inn(X)");
    rho.push_back(value[*idx]);
  }
  return Representation(q, std::move(rho), eps);
}

inline bool is_invariant(const Representation& rep, const Subspace& s, double eps = Tolerances{}.eps) {
  return rep.invariance_residual(s) <= eps;
}

/// Basis of { phi : phi rho_a(x) = rho_b(x) phi for all x } as d_b x d_a
/// matrices with unit Frobenius norm, orthonormal under the trace inner
/// product.
inline std::vector<Matrix> intertwiner_space(const Representation& a, const Representation& b,
                                             const Tolerances& tol = {}) {
  if (!(a.quandle() == b.quandle())) throw domain_error("intertwiner_space: representations of different quandles");
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  const Eigen::Index unknowns = da * db;
  const std::vector<Element> gens = quandle_generating_set(a.quandle());

  // Row (i, j) of phi A - B phi, unknown (i, k) at index i + k * db.
  std::vector<Eigen::Triplet<Scalar>> triplets;
  Eigen::Index row = 0;
  for (Element x : gens) {
    const Matrix& am = a(x);
    const Matrix& bm = b(x);
    for (Eigen::Index j = 0; j < da; ++j) {
      for (Eigen::Index i = 0; i < db; ++i, ++row) {
        for (Eigen::Index k = 0; k < da; ++k)
          if (am(k, j) != Scalar{}) triplets.emplace_back(row, i + k * db, am(k, j));
        for (Eigen::Index k = 0; k < db; ++k)
          if (bm(i, k) != Scalar{}) triplets.emplace_back(row, k + j * db, -bm(i, k));
      }
    }
  }
  Eigen::SparseMatrix<Scalar> system(row, unknowns);
  system.setFromTriplets(triplets.begin(), triplets.end());
  const Eigen::SparseMatrix<Scalar> gram_sparse = Eigen::SparseMatrix<Scalar>(system.adjoint()) * system;
  const Matrix kernel = null_space_from_gram(Matrix(gram_sparse), tol.null_space);

  std::vector<Matrix> basis;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    basis.push_back(Eigen::Map<const Matrix>(kernel.col(c).data(), db, da));
  }
  return basis;
}

/// Basis of the commutant { M : M rho(x) = rho(x) M for all x }.
inline std::vector<Matrix> commutant_basis(const Representation& rep, const Tolerances& tol = {}) {
  return intertwiner_space(rep, rep, tol);
}

}  // namespace qrep
