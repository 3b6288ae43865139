#pragma once

namespace qrep {

/// Numerical thresholds shared by every module. Passed by value; there is no
/// global mutable tolerance.
struct Tolerances {
  /// Invariance, orthonormality, representation-axiom and residual checks.
  double eps = 1e-9;
  /// Absolute gap below which eigenvalues are treated as one eigenspace.
  double eigen_gap = 1e-7;
  /// Singular values at or below this are treated as zero when computing
  /// kernels (commutants, intertwiners).
  double null_space = 1e-6;
  /// Maximum distance when snapping an eigenvalue to a root of unity or a
  /// scalar to +-1.
  double snap = 1e-6;
};

}  // namespace qrep
