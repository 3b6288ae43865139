#pragma once

// Isomorphism classes of irreducible representations of a dihedral group
// D_m (order 2m), in the model where two fixed involutions act by:
//   C(lambda, mu): the scalars lambda, mu in {+1, -1};
//   W(omega_m^s):  [[0,1],[1,0]] and [[0,w],[w^-1,0]], w = omega_m^s.

#include <compare>
#include <map>
#include <string>

#include "qrep/errors.hpp"

namespace qrep {

class IrrepLabel {
 public:
  enum class Kind { C, W };

  static IrrepLabel one_dim(int lambda, int mu) {
    if ((lambda != 1 && lambda != -1) || (mu != 1 && mu != -1))
      throw domain_error("C(lambda, mu) needs lambda, mu in {+1, -1}");
    IrrepLabel l;
    l.kind_ = Kind::C;
    l.lambda_ = lambda;
    l.mu_ = mu;
    return l;
  }

  /// W(omega_m^s) in canonical form: 1 <= s < m/2.
  static IrrepLabel two_dim(int m, int s) {
    if (m < 3) throw domain_error("W label needs m >= 3");
    if (s < 1 || 2 * s >= m) throw domain_error("W label is not canonical: need 1 <= s < m/2");
    IrrepLabel l;
    l.kind_ = Kind::W;
    l.m_ = m;
    l.s_ = s;
    return l;
  }

  Kind kind() const { return kind_; }
  int lambda() const { return lambda_; }
  int mu() const { return mu_; }
  int m() const { return m_; }
  int s() const { return s_; }
  int dimension() const { return kind_ == Kind::C ? 1 : 2; }

  /// ASCII form, also the sort key: "C(1,-1)", "W(omega_5^2)".
  std::string to_string() const {
    if (kind_ == Kind::C) return "C(" + std::to_string(lambda_) + "," + std::to_string(mu_) + ")";
    return "W(omega_" + std::to_string(m_) + "^" + std::to_string(s_) + ")";
  }

  /// Display form: "C(−1,1)", "W(ω_5)", "W(ω_5^2)".
  std::string pretty() const {
    auto sign = [](int v) { return std::string(v < 0 ? "−1" : "1"); };
    if (kind_ == Kind::C) return "C(" + sign(lambda_) + "," + sign(mu_) + ")";
    std::string w = "W(ω_" + std::to_string(m_);
    if (s_ != 1) w += "^" + std::to_string(s_);
    return w + ")";
  }

  friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) { return a.to_string() == b.to_string(); }
  friend std::strong_ordering operator<=>(const IrrepLabel& a, const IrrepLabel& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  IrrepLabel() = default;

  Kind kind_ = Kind::C;
  int lambda_ = 1;
  int mu_ = 1;
  int m_ = 0;
  int s_ = 0;
};

/// Multiset of labels: label -> multiplicity.
using LabelCounts = std::map<IrrepLabel, int>;

inline int total_dimension(const LabelCounts& counts) {
  int sum = 0;
  for (const auto& [label, mult] : counts) sum += label.dimension() * mult;
  return sum;
}

inline std::string to_string(const LabelCounts& counts, bool pretty = false) {
  std::string out = "{";
  bool first = true;
  for (const auto& [label, mult] : counts) {
    if (!first) out += ", ";
    first = false;
    out += pretty ? label.pretty() : label.to_string();
    if (mult != 1) out += (pretty ? "×" : "x") + std::to_string(mult);
  }
  return out + "}";
}

}  // namespace qrep
