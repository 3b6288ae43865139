#include <random>

#include <gtest/gtest.h>

#include "qrep/linalg.hpp"

using namespace qrep;

namespace {

Matrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Scalar(g(rng), g(rng));
  return m;
}

}  // namespace

TEST(RootOfUnity, SmallCases) {
  EXPECT_EQ(root_of_unity(1, 5), Scalar(1.0, 0.0));
  EXPECT_EQ(root_of_unity(4, 1), Scalar(0.0, 1.0));
  EXPECT_EQ(root_of_unity(3, 3), Scalar(1.0, 0.0));
  EXPECT_EQ(root_of_unity(4, -1), Scalar(0.0, -1.0));
  EXPECT_NEAR(std::abs(root_of_unity(6, 1) - Scalar(0.5, std::sqrt(3.0) / 2)), 0.0, 1e-15);
}

TEST(RootOfUnity, ZeroOrderThrows) {
  EXPECT_THROW(root_of_unity(0, 1), domain_error);
  EXPECT_THROW(root_of_unity(-3, 1), domain_error);
}

TEST(RootOfUnity, MultiplicativeProperty) {
  for (int k = 1; k <= 24; ++k)
    for (int p = -30; p <= 30; p += 7)
      for (int q = -11; q <= 40; q += 5)
        EXPECT_LE(std::abs(root_of_unity(k, p) * root_of_unity(k, q) - root_of_unity(k, p + q)), 1e-9)
            << k << " " << p << " " << q;
}

TEST(Eigensplit, Identity) {
  const auto groups = hermitian_eigensplit(Matrix::Identity(3, 3), 1e-7);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_NEAR(groups[0].eigenvalue, 1.0, 1e-12);
  EXPECT_EQ(groups[0].space.dim(), 3u);
}

TEST(Eigensplit, DiagonalWithRepeat) {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1.0, 1.0, 2.0;
  const auto groups = hermitian_eigensplit(d, 1e-7);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_NEAR(groups[0].eigenvalue, 1.0, 1e-12);
  EXPECT_EQ(groups[0].space.dim(), 2u);
  EXPECT_NEAR(groups[1].eigenvalue, 2.0, 1e-12);
  EXPECT_EQ(groups[1].space.dim(), 1u);
}

TEST(Eigensplit, PauliX) {
  Matrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const auto groups = hermitian_eigensplit(x, 1e-7);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_NEAR(groups[0].eigenvalue, -1.0, 1e-12);
  EXPECT_NEAR(groups[1].eigenvalue, 1.0, 1e-12);
  EXPECT_EQ(groups[0].space.dim(), 1u);
  EXPECT_EQ(groups[1].space.dim(), 1u);
}

TEST(Eigensplit, RejectsNonHermitian) {
  Matrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(hermitian_eigensplit(m, 1e-7), contract_violation);
  EXPECT_THROW(hermitian_eigensplit(Matrix::Zero(2, 3), 1e-7), contract_violation);
}

TEST(Eigensplit, ReconstructsRandomHermitian) {
  std::mt19937_64 rng(7);
  const double eps = 1e-9;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + trial % 9;
    Matrix c = random_matrix(rng, n, n);
    // Force a repeated eigenvalue half the time.
    Matrix h = c + c.adjoint();
    if (trial % 2 == 0) {
      Eigen::SelfAdjointEigenSolver<Matrix> s(h);
      Eigen::VectorXd ev = s.eigenvalues();
      ev(1) = ev(0);
      h = s.eigenvectors() * ev.cast<Scalar>().asDiagonal() * s.eigenvectors().adjoint();
      h = (h + h.adjoint()) * 0.5;
    }
    const auto groups = hermitian_eigensplit(h, 1e-7);
    Matrix rebuilt = Matrix::Zero(n, n);
    std::size_t dims = 0;
    for (const auto& g : groups) {
      rebuilt += g.eigenvalue * g.space.projector();
      dims += g.space.dim();
      EXPECT_LE(g.space.orthonormality_defect(), eps);
    }
    EXPECT_EQ(dims, static_cast<std::size_t>(n));
    EXPECT_LE(max_abs(rebuilt - h), 10 * eps * std::max(1.0, max_abs(h)));
  }
}

TEST(SolveLinear, Identity) {
  std::mt19937_64 rng(1);
  const Matrix b = random_matrix(rng, 3, 2);
  const auto x = solve_linear(Matrix::Identity(3, 3), b);
  ASSERT_TRUE(x.has_value());
  EXPECT_LE(max_abs(*x - b), 1e-15);
}

TEST(SolveLinear, ScaledIdentity) {
  const auto x = solve_linear(2.0 * Matrix::Identity(2, 2), Matrix::Identity(2, 2));
  ASSERT_TRUE(x.has_value());
  EXPECT_LE(max_abs(*x - 0.5 * Matrix::Identity(2, 2)), 1e-15);
}

TEST(SolveLinear, SingularFlag) {
  Matrix a(2, 2);
  a << 1.0, 2.0, 2.0, 4.0;
  Matrix b(2, 1);
  b << 1.0, 3.0;
  EXPECT_FALSE(solve_linear(a, b).has_value());
}

TEST(SolveLinear, DimensionMismatch) {
  EXPECT_THROW(solve_linear(Matrix::Identity(2, 2), Matrix::Zero(3, 1)), domain_error);
  EXPECT_THROW(solve_linear(Matrix::Zero(2, 3), Matrix::Zero(2, 1)), domain_error);
}

TEST(Subspace, SpanDropsDependentColumns) {
  Matrix v(3, 3);
  v << 1, 0, 1,
       0, 1, 1,
       0, 0, 0;
  const Subspace s = Subspace::span(v);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.ambient_dim(), 3u);
  EXPECT_LE(s.orthonormality_defect(), 1e-12);
  Vector e2 = Vector::Zero(3);
  e2(2) = 1.0;
  EXPECT_NEAR(s.distance(e2), 1.0, 1e-12);
  EXPECT_NEAR(s.distance(v.col(2)), 0.0, 1e-12);
}

TEST(Subspace, ZeroSpanThrows) {
  EXPECT_THROW(Subspace::span(Matrix::Zero(3, 2)), domain_error);
  EXPECT_THROW(Subspace::full(0), domain_error);
}

TEST(Subspace, RandomSpansAreOrthonormal) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + trial % 12;
    const Eigen::Index k = 1 + trial % n;
    const Subspace s = Subspace::span(random_matrix(rng, n, k));
    EXPECT_EQ(s.dim(), static_cast<std::size_t>(k));
    EXPECT_LE(s.orthonormality_defect(), 1e-9);
  }
}

TEST(NullSpace, KnownKernel) {
  Matrix k(2, 3);
  k << 1, 0, -1,
       0, 1, -1;
  const Matrix ns = null_space(k, 1e-6);
  ASSERT_EQ(ns.cols(), 1);
  EXPECT_LE(max_abs(k * ns), 1e-12);
  EXPECT_EQ(rank(k, 1e-9), 2u);
}

TEST(Hstack, Concatenates) {
  const Matrix a = Matrix::Identity(2, 1);
  const Matrix b = Matrix::Ones(2, 2);
  const Matrix c = hstack({a, b});
  EXPECT_EQ(c.cols(), 3);
  EXPECT_EQ(c(0, 0), Scalar(1.0));
  EXPECT_EQ(c(1, 2), Scalar(1.0));
}
