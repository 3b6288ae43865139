#pragma once

// Generic decomposition of a unitary quandle representation into
// irreducibles: draw a random Hermitian element of the commutant, split into
// its eigenspaces, recurse until every block has a one-dimensional
// commutant.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qrep/errors.hpp"
#include "qrep/irrep_label.hpp"
#include "qrep/linalg.hpp"
#include "qrep/representation.hpp"
#include "qrep/tolerance.hpp"

namespace qrep {

struct Component {
  Subspace space;
  std::optional<IrrepLabel> label;
  std::string note;  // why labeling failed, if it did

  std::size_t dimension() const { return space.dim(); }
};

struct DecompositionReport {
  Representation ambient;
  std::vector<Component> components;
  std::uint64_t seed = 0;

  std::size_t total_dimension() const {
    std::size_t sum = 0;
    for (const auto& c : components) sum += c.dimension();
    return sum;
  }

  /// Worst invariance residual over all components.
  double residual_max() const {
    double worst = 0.0;
    for (const auto& c : components) worst = std::max(worst, ambient.invariance_residual(c.space));
    return worst;
  }

  /// Rank of all component bases side by side.
  std::size_t direct_sum_rank(double cutoff) const {
    std::vector<Matrix> blocks;
    for (const auto& c : components) blocks.push_back(c.space.basis());
    return rank(hstack(blocks), cutoff);
  }

  bool fully_labeled() const {
    return std::all_of(components.begin(), components.end(), [](const Component& c) { return c.label.has_value(); });
  }

  LabelCounts label_counts() const {
    LabelCounts counts;
    for (const auto& c : components)
      if (c.label) ++counts[*c.label];
    return counts;
  }
};

/// Names an irreducible component, or throws labeling_failure.
using Labeler = std::function<IrrepLabel(const Representation& ambient, const Subspace& component)>;

namespace detail {

constexpr int kMaxDegenerateDraws = 16;

class Splitter {
 public:
  Splitter(const Representation& rep, std::uint64_t seed, const Tolerances& tol)
      : rep_(rep), tol_(tol), rng_(seed) {}

  void split(const Subspace& block) {
    const Representation local = rep_.restricted(block, tol_.eps);
    const std::vector<Matrix> comm = commutant_basis(local, tol_);
    if (comm.empty()) throw unsupported("decompose: empty commutant (tolerances too tight)");
    if (comm.size() == 1) {
      leaves_.push_back(block);
      return;
    }
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const auto k = static_cast<Eigen::Index>(block.dim());
    for (int attempt = 0; attempt < kMaxDegenerateDraws; ++attempt) {
      Matrix c = Matrix::Zero(k, k);
      for (const auto& m : comm) {
        const double re = coeff(rng_);
        const double im = coeff(rng_);
        c += Scalar(re, im) * m;
      }
      const Matrix h = c + c.adjoint();
      const auto groups = hermitian_eigensplit(h, tol_.eigen_gap);
      if (groups.size() < 2) continue;
      for (const auto& g : groups) split(Subspace::span(block.basis() * g.space.basis(), tol_.eps));
      return;
    }
    throw unsupported("decompose: commutant has dimension " + std::to_string(comm.size()) +
                      " but " + std::to_string(kMaxDegenerateDraws) + " random draws failed to split it");
  }

  std::vector<Subspace> take() { return std::move(leaves_); }

 private:
  const Representation& rep_;
  Tolerances tol_;
  std::mt19937_64 rng_;
  std::vector<Subspace> leaves_;
};

}  // namespace detail

/// Splits `rep` into irreducible invariant subspaces. Deterministic for a
/// given seed. Components are ordered by descending dimension, then label
/// (unlabeled last); ties keep discovery order.
inline DecompositionReport decompose(const Representation& rep, std::uint64_t seed, const Tolerances& tol = {},
                                     const Labeler& labeler = {}) {
  if (!rep.is_unitary(tol.eps))
    throw unsupported("decompose: representation is not unitary; complete reducibility is not guaranteed");

  detail::Splitter splitter(rep, seed, tol);
  splitter.split(Subspace::full(static_cast<Eigen::Index>(rep.dim())));

  DecompositionReport report{rep, {}, seed};
  for (auto& space : splitter.take()) {
    Component c{std::move(space), std::nullopt, {}};
    if (labeler) {
      try {
        c.label = labeler(rep, c.space);
      } catch (const labeling_failure& e) {
        c.note = e.what();
      }
    }
    report.components.push_back(std::move(c));
  }
  std::stable_sort(report.components.begin(), report.components.end(), [](const Component& a, const Component& b) {
    if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
    if (a.label.has_value() != b.label.has_value()) return a.label.has_value();
    if (a.label && b.label) return *a.label < *b.label;
    return false;
  });
  return report;
}

}  // namespace qrep
