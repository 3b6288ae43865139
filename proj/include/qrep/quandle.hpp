#pragma once

// Finite quandles as operation tables. Elements are 0-indexed; x * y is
// table[x][y] and R_y(x) = x * y.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qrep/errors.hpp"
#include "qrep/permutation.hpp"

namespace qrep {

using OperationTable = std::vector<std::vector<Element>>;

struct AxiomReport {
  bool bijective_columns = false;
  bool right_distributive = false;
  bool idempotent = false;

  bool all() const { return bijective_columns && right_distributive && idempotent; }
};

namespace detail {

inline std::size_t checked_order(const OperationTable& table) {
  const std::size_t n = table.size();
  for (const auto& row : table) {
    if (row.size() != n) throw domain_error("operation table is not square");
    for (Element v : row)
      if (v >= n) throw domain_error("operation table entry out of range");
  }
  return n;
}

}  // namespace detail

/// Exhaustive check of the three quandle axioms. O(n^3).
inline AxiomReport check_axioms(const OperationTable& table) {
  const std::size_t n = detail::checked_order(table);
  AxiomReport report{true, true, true};
  for (std::size_t y = 0; y < n && report.bijective_columns; ++y) {
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      const Element z = table[x][y];
      if (hit[z]) {
        report.bijective_columns = false;
        break;
      }
      hit[z] = true;
    }
  }
  for (std::size_t x = 0; x < n && report.right_distributive; ++x)
    for (std::size_t y = 0; y < n && report.right_distributive; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[table[x][z]][table[y][z]]) {
          report.right_distributive = false;
          break;
        }
  for (std::size_t x = 0; x < n; ++x)
    if (table[x][x] != x) report.idempotent = false;
  return report;
}

inline std::string describe_failures(const AxiomReport& r) {
  std::string out;
  auto add = [&](bool ok, const char* what) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += what;
  };
  add(r.bijective_columns, "right translations are not bijective");
  add(r.right_distributive, "not right distributive");
  add(r.idempotent, "not idempotent");
  return out;
}

class FiniteQuandle {
 public:
  /// Validates all axioms; throws domain_error naming the failed ones.
  static FiniteQuandle from_table(OperationTable table) {
    const AxiomReport report = check_axioms(table);
    if (!report.all()) throw domain_error("not a quandle: " + describe_failures(report));
    if (table.empty()) throw domain_error("quandle must have at least one element");
    return FiniteQuandle(std::move(table));
  }

  std::size_t size() const { return table_.size(); }
  Element operator()(Element x, Element y) const { return table_.at(x).at(y); }
  const OperationTable& table() const { return table_; }

  friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;

 private:
  explicit FiniteQuandle(OperationTable table) : table_(std::move(table)) {}
  OperationTable table_;
};

/// R_n: x * y = 2y - x mod n.
inline FiniteQuandle dihedral(std::size_t n) {
  if (n == 0) throw domain_error("dihedral: order must be positive");
  OperationTable t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = (2 * y + n - x) % n;
  return FiniteQuandle::from_table(std::move(t));
}

/// Alexander quandle on Z_n with f = multiplication by the unit u:
/// x * y = u x + (1 - u) y mod n.
inline FiniteQuandle alexander(std::size_t n, std::int64_t u) {
  if (n == 0) throw domain_error("alexander: order must be positive");
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t unit = ((u % nn) + nn) % nn;
  if (std::gcd(unit, nn) != 1) throw domain_error("alexander: multiplier is not a unit mod n");
  const std::int64_t rest = ((1 - unit) % nn + nn) % nn;
  OperationTable t(n, std::vector<Element>(n));
  for (std::int64_t x = 0; x < nn; ++x)
    for (std::int64_t y = 0; y < nn; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = static_cast<Element>((unit * x + rest * y) % nn);
  return FiniteQuandle::from_table(std::move(t));
}

/// A verified group Cayley table: table[a][b] = a b.
struct GroupTable {
  OperationTable table;
  Element identity = 0;
  std::vector<Element> inverse;

  Element mul(Element a, Element b) const { return table[a][b]; }
};

inline GroupTable validate_group_table(const OperationTable& cayley) {
  const std::size_t n = detail::checked_order(cayley);
  if (n == 0) throw domain_error("group table is empty");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw domain_error("group table is not associative");
  std::optional<Element> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = cayley[a][b] == b && cayley[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw domain_error("group table has no identity");
  std::vector<Element> inv(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (cayley[a][b] == *e && cayley[b][a] == *e) {
        inv[a] = b;
        break;
      }
  for (Element i : inv)
    if (i == n) throw domain_error("group table has an element without inverse");
  return GroupTable{cayley, *e, std::move(inv)};
}

/// Conj(G): x * y = y x y^-1.
inline FiniteQuandle conjugation_quandle(const OperationTable& cayley) {
  const GroupTable g = validate_group_table(cayley);
  const std::size_t n = g.table.size();
  OperationTable t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = g.mul(g.mul(y, x), g.inverse[y]);
  return FiniteQuandle::from_table(std::move(t));
}

/// Core(G): x * y = y x^-1 y.
inline FiniteQuandle core_quandle(const OperationTable& cayley) {
  const GroupTable g = validate_group_table(cayley);
  const std::size_t n = g.table.size();
  OperationTable t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = g.mul(g.mul(y, g.inverse[x]), y);
  return FiniteQuandle::from_table(std::move(t));
}

/// R_x: y -> y * x.
inline Permutation right_translation(const FiniteQuandle& q, Element x) {
  if (x >= q.size()) throw domain_error("right_translation: element out of range");
  std::vector<Element> images(q.size());
  for (std::size_t y = 0; y < q.size(); ++y) images[y] = q(y, x);
  return Permutation(std::move(images));
}

}  // namespace qrep
