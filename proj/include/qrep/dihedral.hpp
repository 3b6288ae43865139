#pragma once

// Closed-form side for dihedral quandles R_n: the irreducibles of D_m, the
// difference-vector bases of the orbit subspaces, the explicit vectors
// u_s, v_s spanning the two-dimensional pieces, the expected decomposition
// of the regular representation, and labeling of numerically found
// components.
//
// Elements are 0-indexed; the display element k corresponds to internal
// k - 1, so "R_1" and "R_2" are internal 0 and 1, and e_i is internal i - 1.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qrep/decomposition.hpp"
#include "qrep/errors.hpp"
#include "qrep/irrep_label.hpp"
#include "qrep/linalg.hpp"
#include "qrep/quandle.hpp"
#include "qrep/representation.hpp"
#include "qrep/tolerance.hpp"

namespace qrep {

enum class Orbit { even, odd, full };

inline const char* to_string(Orbit o) {
  switch (o) {
    case Orbit::even: return "even";
    case Orbit::odd: return "odd";
    default: return "full";
  }
}

/// Irreducibles of D_m: four (m even) or two (m odd) one-dimensional
/// classes, then W(omega_m^s) for 1 <= s < m/2.
inline std::vector<IrrepLabel> irrep_catalog(int m) {
  if (m < 3) throw domain_error("irrep_catalog: m must be at least 3");
  std::vector<IrrepLabel> out;
  if (m % 2 == 0) {
    out = {IrrepLabel::one_dim(1, 1), IrrepLabel::one_dim(1, -1), IrrepLabel::one_dim(-1, 1),
           IrrepLabel::one_dim(-1, -1)};
  } else {
    out = {IrrepLabel::one_dim(1, 1), IrrepLabel::one_dim(-1, -1)};
  }
  for (int s = 1; 2 * s < m; ++s) out.push_back(IrrepLabel::two_dim(m, s));
  return out;
}

/// W(omega_m^t) is isomorphic to W(omega_m^-t); picks s = min(t, m - t).
inline IrrepLabel canonicalize_w(int m, std::int64_t t) {
  if (m < 3) throw domain_error("canonicalize_w: m must be at least 3");
  std::int64_t r = t % m;
  if (r < 0) r += m;
  if (r == 0 || 2 * r == m) throw domain_error("canonicalize_w: omega_m^t = +-1 gives no two-dimensional irreducible");
  return IrrepLabel::two_dim(m, static_cast<int>(std::min<std::int64_t>(r, m - r)));
}

namespace detail {

inline Vector basis_vector(int n, int internal) {
  Vector e = Vector::Zero(n);
  e(internal) = 1.0;
  return e;
}

/// v_{xy} = e_x - e_y with display indices.
inline Vector difference(int n, int x, int y) {
  return basis_vector(n, x - 1) - basis_vector(n, y - 1);
}

inline void require_orbit(int n, Orbit orbit) {
  if (n % 2 == 0 && orbit == Orbit::full) throw domain_error("n even: orbit must be even or odd");
  if (n % 2 != 0 && orbit != Orbit::full) throw domain_error("n odd: R_n has a single orbit, use Orbit::full");
}

}  // namespace detail

/// Columns of the difference basis of an orbit subspace, in ambient
/// coordinates: v_{2,4}, ..., v_{2r-2,2r} (even orbit), v_{1,3}, ...,
/// v_{2r-3,2r-1} (odd orbit), or v_{1,2}, ..., v_{n-1,n} (n odd).
inline Matrix delta_basis(int n, Orbit orbit) {
  if (n < 3) throw domain_error("delta_basis: n must be at least 3");
  detail::require_orbit(n, orbit);
  if (orbit == Orbit::full) {
    Matrix d(n, n - 1);
    for (int i = 1; i <= n - 1; ++i) d.col(i - 1) = detail::difference(n, i, i + 1);
    return d;
  }
  const int r = n / 2;
  Matrix d(n, r - 1);
  for (int i = 1; i <= r - 1; ++i) {
    d.col(i - 1) = orbit == Orbit::even ? detail::difference(n, 2 * i, 2 * i + 2)
                                        : detail::difference(n, 2 * i - 1, 2 * i + 1);
  }
  return d;
}

struct OrbitOperators {
  /// Internal labels of the two generators, in the order of the matrices.
  std::array<Element, 2> generators;
  /// Anti-diagonal of -1.
  Matrix reflection;
  /// First column all ones, -1 on the anti-diagonal below the first row.
  Matrix ones_column;
};

/// Matrices of two generating right translations on an orbit subspace of
/// R_n (n even), in its difference basis. Even orbit: R_1, R_2. Odd orbit:
/// R_{n/2}, R_1.
inline OrbitOperators orbit_matrix_reps(int n, Orbit orbit) {
  if (n % 2 != 0) throw domain_error("orbit_matrix_reps: n must be even");
  if (n < 6) throw domain_error("orbit_matrix_reps: n must be at least 6");
  if (orbit == Orbit::full) throw domain_error("orbit_matrix_reps: choose the even or odd orbit");
  const int k = n / 2 - 1;
  Matrix reflection = Matrix::Zero(k, k);
  Matrix ones = Matrix::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    reflection(i, k - 1 - i) = -1.0;
    ones(i, 0) = 1.0;
    if (i > 0) ones(i, k - i) = -1.0;
  }
  const std::array<Element, 2> gens = orbit == Orbit::even
                                          ? std::array<Element, 2>{0, 1}
                                          : std::array<Element, 2>{static_cast<Element>(n / 2 - 1), 0};
  return {gens, std::move(reflection), std::move(ones)};
}

/// u_s = sum_i (1 - w^{s i}) delta_i over the orbit's difference basis, with
/// w = omega_{n/2} (n even, 1 <= s <= n/2 - 1) or omega_n (n odd,
/// 1 <= s <= n - 1).
inline Vector u_vector(int n, int s, Orbit orbit) {
  if (n < 3) throw domain_error("u_vector: n must be at least 3");
  detail::require_orbit(n, orbit);
  const int order = orbit == Orbit::full ? n : n / 2;
  if (s < 1 || s > order - 1) throw domain_error("u_vector: s out of range");
  const Matrix delta = delta_basis(n, orbit);
  Vector u = Vector::Zero(n);
  for (int i = 1; i <= delta.cols(); ++i) {
    u += (Scalar(1.0) - root_of_unity(order, static_cast<std::int64_t>(s) * i)) * delta.col(i - 1);
  }
  return u;
}

/// v_s = R_1(u_s) in every case. On the odd orbit this also equals
/// omega_{n/2}^s R_{n/2}(u_s).
inline Vector v_vector(int n, int s, Orbit orbit) {
  const Vector u = u_vector(n, s, orbit);
  return regular_representation(dihedral(static_cast<std::size_t>(n)))(0) * u;
}

/// sum_i (-1)^i e_i, i.e. +1 on even display positions.
inline Vector hat_one(int n) {
  if (n < 2 || n % 2 != 0) throw domain_error("hat_one: n must be even");
  Vector h(n);
  for (int j = 0; j < n; ++j) h(j) = (j % 2 == 0) ? -1.0 : 1.0;
  return h;
}

struct ExpectedDecomposition {
  int n = 0;
  LabelCounts labels;
};

/// Closed-form decomposition of the regular representation of R_n into
/// irreducibles, canonical labels.
inline ExpectedDecomposition theorem_decomposition(int n) {
  if (n < 3) throw domain_error("theorem_decomposition: n must be at least 3");
  ExpectedDecomposition out{n, {}};
  auto& l = out.labels;
  if (n % 4 == 0) {
    const int r = n / 2;
    l[IrrepLabel::one_dim(1, 1)] = 2;
    l[IrrepLabel::one_dim(-1, 1)] = 1;
    l[IrrepLabel::one_dim(1, -1)] = 1;
    for (int s = 1; s <= n / 4 - 1; ++s) l[IrrepLabel::two_dim(r, s)] = 2;
  } else if (n % 4 == 2) {
    const int r = n / 2;
    l[IrrepLabel::one_dim(1, 1)] = 2;
    for (int s = 1; s <= (n - 2) / 4; ++s) l[IrrepLabel::two_dim(r, s)] = 2;
  } else {
    l[IrrepLabel::one_dim(1, 1)] = 1;
    for (int s = 1; s <= (n - 1) / 2; ++s) ++l[canonicalize_w(n, 2 * s)];
  }
  return out;
}

namespace detail {

inline int snap_sign(Scalar z, double tol) {
  if (std::abs(z - 1.0) <= tol) return 1;
  if (std::abs(z + 1.0) <= tol) return -1;
  throw labeling_failure("scalar " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) +
                         "i is not within snapping distance of +-1");
}

/// Nearest t with |z - omega_m^t| minimal; throws if farther than tol.
inline std::int64_t snap_root(Scalar z, int m, double tol) {
  const double turns = std::arg(z) / (2.0 * std::numbers::pi) * m;
  std::int64_t t = std::llround(turns) % m;
  if (t < 0) t += m;
  if (std::abs(z - root_of_unity(m, t)) > tol)
    throw labeling_failure("eigenvalue is not within snapping distance of an m-th root of unity");
  return t;
}

inline bool is_dihedral(const FiniteQuandle& q) {
  return q == dihedral(q.size());
}

}  // namespace detail

/// Names the irreducible component `s` of a representation of R_n by
/// reading rho at the elements displayed as 1 and 2.
inline IrrepLabel label_component(const Representation& rep, const Subspace& s, const Tolerances& tol = {}) {
  if (!detail::is_dihedral(rep.quandle())) throw domain_error("label_component: quandle is not dihedral");
  const int n = static_cast<int>(rep.quandle().size());
  if (n < 3) throw domain_error("label_component: n must be at least 3");
  if (s.dim() > 2) throw contract_violation("label_component: dihedral irreducibles have dimension 1 or 2");
  const Representation local = rep.restricted(s, tol.eps);
  if (commutant_basis(local, tol).size() != 1) throw contract_violation("label_component: component is reducible");

  if (s.dim() == 1) {
    return IrrepLabel::one_dim(detail::snap_sign(local(0)(0, 0), tol.snap), detail::snap_sign(local(1)(0, 0), tol.snap));
  }
  const int m = n % 2 == 0 ? n / 2 : n;
  if (m < 3) throw labeling_failure("label_component: D_m with m < 3 has no two-dimensional irreducibles");
  const Matrix rotation = local(1) * local(0);
  Eigen::ComplexEigenSolver<Matrix> solver(rotation);
  const auto& ev = solver.eigenvalues();
  const std::int64_t t0 = detail::snap_root(ev(0), m, tol.snap);
  const std::int64_t t1 = detail::snap_root(ev(1), m, tol.snap);
  if ((t0 + t1) % m != 0) throw labeling_failure("label_component: eigenvalues are not a pair lambda, 1/lambda");
  if (t0 == 0 || 2 * t0 == m) throw labeling_failure("label_component: two-dimensional block with real rotation eigenvalue");
  return canonicalize_w(m, t0);
}

/// Label of an irreducible representation given directly.
inline IrrepLabel label_component(const Representation& irreducible, const Tolerances& tol = {}) {
  return label_component(irreducible, Subspace::full(static_cast<Eigen::Index>(irreducible.dim())), tol);
}

inline Labeler dihedral_labeler(const Tolerances& tol = {}) {
  return [tol](const Representation& rep, const Subspace& s) {
    try {
      return label_component(rep, s, tol);
    } catch (const contract_violation& e) {
      throw labeling_failure(e.what());
    }
  };
}

/// Quandle representation of R_n induced by a catalog irreducible of
/// Inn(R_n) = D_m, with R_1, R_2 acting as the model matrices.
inline Representation model_representation(int n, const IrrepLabel& label, double eps = Tolerances{}.eps) {
  const FiniteQuandle q = dihedral(static_cast<std::size_t>(n));
  if (label.kind() == IrrepLabel::Kind::C) {
    Matrix a(1, 1), b(1, 1);
    a(0, 0) = static_cast<double>(label.lambda());
    b(0, 0) = static_cast<double>(label.mu());
    return induced_representation(q, {0, 1}, {a, b}, eps);
  }
  const Scalar w = root_of_unity(label.m(), label.s());
  Matrix a(2, 2), b(2, 2);
  a << 0.0, 1.0, 1.0, 0.0;
  b << Scalar(0.0), w, 1.0 / w, Scalar(0.0);
  return induced_representation(q, {0, 1}, {a, b}, eps);
}

struct TheoremCheck {
  int n = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  LabelCounts expected;
  LabelCounts found;
  std::vector<double> component_residuals;
  double residual_max = 0.0;
  DecompositionReport decomposition;
};

/// Decomposes the regular representation of R_n numerically, labels every
/// component and compares with the closed-form multiset.
inline TheoremCheck verify_theorem(int n, std::uint64_t seed, const Tolerances& tol = {}) {
  const ExpectedDecomposition expected = theorem_decomposition(n);
  const Representation reg = regular_representation(dihedral(static_cast<std::size_t>(n)));
  DecompositionReport report = decompose(reg, seed, tol, dihedral_labeler(tol));
  TheoremCheck check{n, seed, false, expected.labels, report.label_counts(), {}, 0.0, report};
  for (const auto& c : report.components) {
    const double r = reg.invariance_residual(c.space);
    check.component_residuals.push_back(r);
    check.residual_max = std::max(check.residual_max, r);
  }
  check.pass = report.fully_labeled() && check.found == check.expected &&
               report.total_dimension() == static_cast<std::size_t>(n) && check.residual_max <= tol.eps;
  return check;
}

/// One row of the closed-form decomposition table.
struct ClosedFormSubrep {
  std::string name;     // "C𝟏", "C𝟏̂", "U_{s,0}", "U_{s,1}", "U_s"
  std::string group;    // enclosing orbit subspace, e.g. "Φ_{12,0}"; empty if none
  IrrepLabel label;
  Vector generator;
  std::string generator_formula;
  Subspace space;
};

namespace detail {

inline std::string power_formula(int order, int s) {
  if (2 * s == order) return "(−1)^i";
  const std::string base = "ω_" + std::to_string(order);
  if (s == 1) return base + "^i";
  return base + "^{" + std::to_string(s) + "i}";
}

}  // namespace detail

/// The explicit decomposition: C𝟏, then C𝟏̂ and U_{s,0}, U_{s,1}
/// (1 <= s <= floor(r/2)) for n = 2r, or U_s (1 <= s <= (n-1)/2) for n odd.
inline std::vector<ClosedFormSubrep> closed_form_subreps(int n, double eps = Tolerances{}.eps) {
  if (n < 3) throw domain_error("closed_form_subreps: n must be at least 3");
  std::vector<ClosedFormSubrep> rows;
  const Vector ones = Vector::Ones(n);
  rows.push_back({"C𝟏", "", IrrepLabel::one_dim(1, 1), ones, "𝟏", Subspace::span(ones, eps)});
  if (n % 2 == 0) {
    const int r = n / 2;
    const Vector h = hat_one(n);
    rows.push_back({"C𝟏̂", "", IrrepLabel::one_dim(1, 1), h, "𝟏̂", Subspace::span(h, eps)});
    for (int side = 0; side < 2; ++side) {
      const Orbit orbit = side == 0 ? Orbit::even : Orbit::odd;
      const std::string group = "Φ_{" + std::to_string(n) + "," + std::to_string(side) + "}";
      const std::string diff = side == 0 ? "v_{2i,2i+2}" : "v_{2i−1,2i+1}";
      for (int s = 1; s <= r / 2; ++s) {
        const Vector u = u_vector(n, s, orbit);
        const Vector v = v_vector(n, s, orbit);
        Matrix uv(n, 2);
        uv << u, v;
        const IrrepLabel label = 2 * s == r ? (side == 0 ? IrrepLabel::one_dim(-1, 1) : IrrepLabel::one_dim(1, -1))
                                            : IrrepLabel::two_dim(r, s);
        rows.push_back({"U_{" + std::to_string(s) + "," + std::to_string(side) + "}", group, label, u,
                        "Σ_{i=1}^{" + std::to_string(r - 1) + "} (1 − " + detail::power_formula(r, s) + ") " + diff,
                        Subspace::span(uv, 1e-6)});
      }
    }
  } else {
    for (int s = 1; s <= (n - 1) / 2; ++s) {
      const Vector u = u_vector(n, s, Orbit::full);
      const Vector v = v_vector(n, s, Orbit::full);
      Matrix uv(n, 2);
      uv << u, v;
      rows.push_back({"U_" + std::to_string(s), "", canonicalize_w(n, 2 * s), u,
                      "Σ_{i=1}^{" + std::to_string(n - 1) + "} (1 − " + detail::power_formula(n, s) + ") v_{i,i+1}",
                      Subspace::span(uv, 1e-6)});
    }
  }
  return rows;
}

}  // namespace qrep
