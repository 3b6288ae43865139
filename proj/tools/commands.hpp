#pragma once

// Implementation of the quandle-rep subcommands. Each command writes to the
// given streams and returns the process exit code:
//   0 success, 1 verification / axiom / labeling failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrep/decomposition.hpp"
#include "qrep/dihedral.hpp"
#include "qrep/permutation_group.hpp"
#include "qrep/quandle.hpp"
#include "qrep/quandle_io.hpp"
#include "qrep/report.hpp"
#include "qrep/representation.hpp"

namespace qrep::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kTolEnv = "QUANDLE_REP_TOL";

/// eps from --tol, else $QUANDLE_REP_TOL, else the default.
inline Tolerances resolve_tolerances(std::optional<double> flag) {
  Tolerances tol;
  if (flag) {
    tol.eps = *flag;
  } else if (const char* env = std::getenv(kTolEnv); env && *env) {
    try {
      std::size_t used = 0;
      tol.eps = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw usage_error(std::string(kTolEnv) + " is not a number: '" + env + "'");
    }
  }
  if (!(tol.eps > 0.0)) throw usage_error("tolerance must be positive");
  return tol;
}

struct QuandleSource {
  std::optional<int> dihedral;
  std::optional<std::string> alexander;  // "N,U"
  std::optional<std::string> table_file;
};

struct LoadedTable {
  OperationTable table;
  std::string kind;   // "dihedral", "alexander", "table"
  std::string title;  // "R_10", "Alexander(5,2)", file name
};

inline LoadedTable load(const QuandleSource& src) {
  const int given = (src.dihedral ? 1 : 0) + (src.alexander ? 1 : 0) + (src.table_file ? 1 : 0);
  if (given != 1) throw usage_error("give exactly one of --dihedral, --alexander, --table");
  try {
    if (src.dihedral) {
      if (*src.dihedral < 1) throw usage_error("--dihedral needs a positive order");
      const auto q = dihedral(static_cast<std::size_t>(*src.dihedral));
      return {q.table(), "dihedral", "R_" + std::to_string(*src.dihedral)};
    }
    if (src.alexander) {
      static const std::regex pattern(R"(^\s*(\d+)\s*,\s*(-?\d+)\s*$)");
      std::smatch m;
      if (!std::regex_match(*src.alexander, m, pattern)) throw usage_error("--alexander expects N,U");
      const auto n = std::stoull(m[1].str());
      const auto u = std::stoll(m[2].str());
      if (n == 0) throw usage_error("--alexander needs a positive order");
      const auto q = alexander(static_cast<std::size_t>(n), u);
      return {q.table(), "alexander", "Alexander(" + std::to_string(n) + "," + std::to_string(u) + ")"};
    }
    std::ifstream in(*src.table_file);
    if (!in) throw usage_error("cannot open table file '" + *src.table_file + "'");
    return {read_table(in), "table", *src.table_file};
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
}

// --- formatting -------------------------------------------------------------

/// Terminal columns taken by a UTF-8 string; combining marks take none.
inline std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4;
    char32_t cp = 0;
    if (len == 1) {
      cp = c;
    } else {
      cp = c & (0xFF >> (len + 1));
      for (std::size_t k = 1; k < len && i + k < s.size(); ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    }
    if (!(cp >= 0x300 && cp <= 0x36F)) ++width;
    i += len;
  }
  return width;
}

inline std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s + " " : s + std::string(width - w, ' ');
}

inline std::string format_real(double x, int precision = 3) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

inline std::string format_scalar(Scalar z) {
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  if (im == 0.0) return format_real(re);
  if (re == 0.0) return format_real(im) + "i";
  return format_real(re) + (im < 0 ? "" : "+") + format_real(im) + "i";
}

inline std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_scalar(v(i));
  return out + ")";
}

inline std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", r);
  return buf;
}

inline std::string format_orbits(const Partition& p) {
  std::string out;
  for (const auto& block : p) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + std::to_string(block[i] + 1);
    out += "}";
  }
  return out;
}

// --- info -------------------------------------------------------------------

inline int cmd_info(const QuandleSource& src, bool json, std::ostream& out, std::ostream& err) {
  LoadedTable loaded;
  try {
    loaded = load(src);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const AxiomReport axioms = check_axioms(loaded.table);
  const std::size_t n = loaded.table.size();
  nlohmann::json j{{"n", n},
                   {"quandle_kind", loaded.kind},
                   {"axioms",
                    {{"bijective_columns", axioms.bijective_columns},
                     {"right_distributive", axioms.right_distributive},
                     {"idempotent", axioms.idempotent}}}};
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  if (!axioms.all()) {
    if (json) {
      out << j.dump(2) << '\n';
    } else {
      out << "quandle: " << loaded.title << '\n' << "order: " << n << '\n';
      out << "axioms: bijective_columns=" << yes(axioms.bijective_columns)
          << " right_distributive=" << yes(axioms.right_distributive) << " idempotent=" << yes(axioms.idempotent) << '\n';
    }
    err << "error: not a quandle: " << describe_failures(axioms) << '\n';
    return kFailure;
  }
  const FiniteQuandle q = FiniteQuandle::from_table(loaded.table);
  const PermutationGroup inn = inner_group(q);
  const Partition orb = orbits(q);
  const bool connected = orb.size() == 1;
  if (json) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : orb) {
      nlohmann::json block = nlohmann::json::array();
      for (Element x : b) block.push_back(x + 1);
      blocks.push_back(block);
    }
    j["inn_order"] = inn.order();
    j["orbits"] = blocks;
    j["connected"] = connected;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "quandle: " << loaded.title << '\n';
  out << "order: " << n << '\n';
  out << "axioms: bijective_columns=yes right_distributive=yes idempotent=yes\n";
  out << "|Inn(X)|: " << inn.order() << '\n';
  out << "orbits: " << format_orbits(orb) << '\n';
  out << "connected: " << yes(connected) << '\n';
  return kOk;
}

// --- decompose --------------------------------------------------------------

struct TableRow {
  std::string name;
  std::string label;
  std::string generated_by;
  std::size_t dimension = 0;
};

struct DecomposeOutcome {
  ReportDocument doc;
  std::vector<std::string> header;  // decomposition identity lines
  std::string irrep_column = "irrep";
  std::vector<TableRow> rows;
  std::vector<std::string> notes;
  std::size_t component_count = 0;
  bool labels_ok = true;
  bool closed_form_checked = false;
  bool closed_form_match = true;
};

inline DecomposeOutcome analyze_dihedral(int n, std::uint64_t seed, const Tolerances& tol) {
  const FiniteQuandle q = dihedral(static_cast<std::size_t>(n));
  const Representation reg = regular_representation(q);
  const DecompositionReport report = decompose(reg, seed, tol, dihedral_labeler(tol));
  const std::vector<ClosedFormSubrep> closed = closed_form_subreps(n, tol.eps);
  const LabelCounts expected = theorem_decomposition(n).labels;

  DecomposeOutcome o;
  o.component_count = report.components.size();
  o.closed_form_checked = true;
  const int m = n % 2 == 0 ? n / 2 : n;
  o.irrep_column = "irrep of D_" + std::to_string(m);

  // Pair closed-form rows with numeric components of the same label, in order.
  const std::size_t nc = report.components.size();
  std::vector<std::optional<std::size_t>> numeric_for(closed.size());
  std::vector<std::optional<std::size_t>> closed_for(nc);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      const auto& c = report.components[j];
      if (!closed_for[j] && c.label && *c.label == closed[i].label) {
        numeric_for[i] = j;
        closed_for[j] = i;
        break;
      }
    }
  }

  // Isotypic spans of the numerical decomposition.
  std::map<IrrepLabel, Subspace> isotypic;
  {
    std::map<IrrepLabel, std::vector<Matrix>> blocks;
    for (const auto& c : report.components)
      if (c.label) blocks[*c.label].push_back(c.space.basis());
    for (const auto& [label, b] : blocks) isotypic.emplace(label, Subspace::span(hstack(b), tol.eps));
  }

  std::vector<double> numeric_residual(nc);
  for (std::size_t j = 0; j < nc; ++j) numeric_residual[j] = reg.invariance_residual(report.components[j].space);

  std::vector<double> closed_residual(closed.size(), 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    double r = reg.invariance_residual(closed[i].space);
    if (numeric_for[i]) {
      r = std::max(r, numeric_residual[*numeric_for[i]]);
      const Vector g = closed[i].generator / closed[i].generator.norm();
      r = std::max(r, isotypic.at(closed[i].label).distance(g));
    }
    closed_residual[i] = r;
    worst = std::max(worst, r);
  }
  for (std::size_t j = 0; j < nc; ++j) worst = std::max(worst, numeric_residual[j]);

  // Header lines.
  std::string top = "CR_" + std::to_string(n) + " = ";
  std::map<std::string, std::vector<std::string>> groups;
  std::vector<std::string> group_order;
  bool first = true;
  for (const auto& row : closed) {
    std::string piece = row.group.empty() ? row.name : row.group;
    if (!row.group.empty()) {
      if (!groups.contains(row.group)) group_order.push_back(row.group);
      groups[row.group].push_back(row.name);
      if (groups[row.group].size() > 1) continue;
    }
    top += (first ? "" : " ⊕ ") + piece;
    first = false;
  }
  o.header.push_back("Regular quandle representation of R_" + std::to_string(n));
  o.header.push_back(top);
  for (const auto& g : group_order) {
    std::string line = g + " = ";
    for (std::size_t k = 0; k < groups[g].size(); ++k) line += (k ? " ⊕ " : "") + groups[g][k];
    o.header.push_back(line);
  }

  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (numeric_for[i]) {
      o.rows.push_back({closed[i].name, closed[i].label.pretty(), closed[i].generator_formula, closed[i].space.dim()});
    } else {
      o.closed_form_match = false;
      o.notes.push_back("closed-form " + closed[i].name + " ≅ " + closed[i].label.pretty() +
                        " has no matching numerical component");
    }
  }
  std::map<std::size_t, std::string> extra_names;
  int extra = 0;
  for (std::size_t j = 0; j < nc; ++j) {
    if (closed_for[j]) continue;
    o.closed_form_match = false;
    const auto& c = report.components[j];
    const std::string name = "V_" + std::to_string(++extra);
    extra_names[j] = name;
    o.rows.push_back({name, c.label ? c.label->pretty() : "?", format_vector(c.space.basis().col(0)), c.dimension()});
    if (!c.label) o.notes.push_back(name + ": labeling failed: " + c.note);
  }
  o.labels_ok = report.fully_labeled();
  if (report.label_counts() != expected) o.closed_form_match = false;

  // JSON document: one entry per label, members in canonical order.
  o.doc.n = n;
  o.doc.quandle_kind = "dihedral";
  o.doc.seed = seed;
  o.doc.residual_max = worst;
  for (std::size_t j = 0; j < nc; ++j) {
    const auto& c = report.components[j];
    ReportMember member;
    if (closed_for[j]) {
      member = {closed[*closed_for[j]].name, to_std_vector(closed[*closed_for[j]].generator), closed_residual[*closed_for[j]]};
    } else {
      member = {extra_names[j], to_std_vector(c.space.basis().col(0)), numeric_residual[j]};
    }
    auto it = std::find_if(o.doc.components.begin(), o.doc.components.end(),
                           [&](const ReportComponent& rc) { return c.label && rc.label == c.label; });
    if (it == o.doc.components.end()) {
      o.doc.components.push_back({c.label, static_cast<int>(c.dimension()), 0, member.generator_vector, {}});
      it = std::prev(o.doc.components.end());
    }
    ++it->multiplicity;
    it->members.push_back(std::move(member));
  }
  return o;
}

/// Non-dihedral quandles: components are grouped into isomorphism classes
/// by testing for nonzero intertwiners, but carry no catalog label.
inline DecomposeOutcome analyze_generic(const FiniteQuandle& q, const std::string& kind, const std::string& title,
                                        std::uint64_t seed, const Tolerances& tol) {
  const Representation reg = regular_representation(q);
  const DecompositionReport report = decompose(reg, seed, tol);
  const std::size_t nc = report.components.size();

  DecomposeOutcome o;
  o.component_count = nc;
  o.header.push_back("Regular quandle representation of " + title);
  std::string top = "CX = ";
  for (std::size_t j = 0; j < nc; ++j) top += (j ? " ⊕ " : "") + std::string("V_") + std::to_string(j + 1);
  o.header.push_back(top);

  std::vector<Representation> restricted;
  for (const auto& c : report.components) restricted.push_back(reg.restricted(c.space, tol.eps));
  std::vector<std::size_t> cls(nc);
  std::vector<std::size_t> representative;
  for (std::size_t j = 0; j < nc; ++j) {
    cls[j] = representative.size();
    for (std::size_t k = 0; k < representative.size(); ++k) {
      const std::size_t r = representative[k];
      if (report.components[r].dimension() == report.components[j].dimension() &&
          !intertwiner_space(restricted[r], restricted[j], tol).empty()) {
        cls[j] = k;
        break;
      }
    }
    if (cls[j] == representative.size()) representative.push_back(j);
  }

  o.doc.n = static_cast<int>(q.size());
  o.doc.quandle_kind = kind;
  o.doc.seed = seed;
  std::vector<int> entry_for(representative.size(), -1);
  for (std::size_t j = 0; j < nc; ++j) {
    const auto& c = report.components[j];
    const std::string name = "V_" + std::to_string(j + 1);
    const double res = reg.invariance_residual(c.space);
    o.doc.residual_max = std::max(o.doc.residual_max, res);
    o.rows.push_back({name, "class " + std::to_string(cls[j] + 1), format_vector(c.space.basis().col(0)), c.dimension()});
    ReportMember member{name, to_std_vector(c.space.basis().col(0)), res};
    if (entry_for[cls[j]] < 0) {
      entry_for[cls[j]] = static_cast<int>(o.doc.components.size());
      o.doc.components.push_back({std::nullopt, static_cast<int>(c.dimension()), 0, member.generator_vector, {}});
    }
    auto& entry = o.doc.components[static_cast<std::size_t>(entry_for[cls[j]])];
    ++entry.multiplicity;
    entry.members.push_back(std::move(member));
  }
  return o;
}

inline void print_table(const DecomposeOutcome& o, std::ostream& out) {
  for (const auto& h : o.header) out << h << '\n';
  out << '\n';
  std::size_t w_name = display_width("subrep"), w_label = display_width(o.irrep_column), w_gen = display_width("generated by");
  for (const auto& r : o.rows) {
    w_name = std::max(w_name, display_width(r.name));
    w_label = std::max(w_label, display_width(r.label));
    w_gen = std::max(w_gen, display_width(r.generated_by));
  }
  out << pad("subrep", w_name + 2) << "  " << pad(o.irrep_column, w_label + 2) << pad("generated by", w_gen + 2)
      << "dimension\n";
  for (const auto& r : o.rows) {
    out << pad(r.name, w_name + 2) << "≅ " << pad(r.label, w_label + 2) << pad(r.generated_by, w_gen + 2)
        << r.dimension << '\n';
  }
  out << '\n';
}

inline int cmd_decompose(const QuandleSource& src, std::uint64_t seed, const Tolerances& tol, bool json,
                         std::ostream& out, std::ostream& err) {
  LoadedTable loaded;
  try {
    loaded = load(src);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const AxiomReport axioms = check_axioms(loaded.table);
  if (!axioms.all()) {
    err << "error: not a quandle: " << describe_failures(axioms) << '\n';
    return kFailure;
  }
  const FiniteQuandle q = FiniteQuandle::from_table(loaded.table);
  const int n = static_cast<int>(q.size());

  DecomposeOutcome o;
  try {
    if (n >= 3 && q == dihedral(q.size())) {
      o = analyze_dihedral(n, seed, tol);
      if (loaded.kind != "dihedral") o.doc.quandle_kind = loaded.kind + " (dihedral R_" + std::to_string(n) + ")";
    } else {
      o = analyze_generic(q, loaded.kind, loaded.title, seed, tol);
    }
  } catch (const std::exception& e) {
    err << "error: decomposition failed: " << e.what() << '\n';
    return kFailure;
  }

  if (json) {
    out << to_json(o.doc).dump(2) << '\n';
  } else {
    print_table(o, out);
    out << "numerical decomposition: " << o.component_count << " components, seed " << seed << ", residual_max "
        << format_residual(o.doc.residual_max) << '\n';
    if (o.closed_form_checked) out << "closed form: " << (o.closed_form_match && o.labels_ok ? "match" : "MISMATCH") << '\n';
  }
  for (const auto& note : o.notes) err << "warning: " << note << '\n';
  if (!o.labels_ok) {
    err << "error: some components could not be labeled\n";
    return kFailure;
  }
  if (o.closed_form_checked && !o.closed_form_match) {
    err << "error: numerical decomposition disagrees with the closed form\n";
    return kFailure;
  }
  return kOk;
}

// --- verify -----------------------------------------------------------------

inline std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex pattern(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw usage_error("--range expects A..B");
  const int a = std::stoi(m[1].str());
  const int b = std::stoi(m[2].str());
  if (a < 3) throw usage_error("--range must start at 3 or above");
  if (b < a) throw usage_error("--range is empty");
  return {a, b};
}

inline int cmd_verify(const std::string& range, std::uint64_t seed, const Tolerances& tol, bool json, std::ostream& out,
                      std::ostream& err) {
  std::pair<int, int> bounds;
  try {
    bounds = parse_range(range);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  int passed = 0;
  int total = 0;
  nlohmann::json results = nlohmann::json::array();
  for (int n = bounds.first; n <= bounds.second; ++n) {
    ++total;
    nlohmann::json r{{"n", n}};
    try {
      const TheoremCheck check = verify_theorem(n, seed, tol);
      passed += check.pass ? 1 : 0;
      r["pass"] = check.pass;
      r["residual_max"] = check.residual_max;
      r["expected"] = label_counts_to_json(check.expected);
      r["found"] = label_counts_to_json(check.found);
      if (!json) {
        out << pad("R_" + std::to_string(n), 6) << (check.pass ? "pass" : "FAIL") << "  residual_max "
            << format_residual(check.residual_max) << "  " << to_string(check.found, true);
        if (!check.pass) out << "  expected " << to_string(check.expected, true);
        out << '\n';
      }
    } catch (const std::exception& e) {
      r["pass"] = false;
      r["error"] = e.what();
      if (!json) out << pad("R_" + std::to_string(n), 6) << "FAIL  " << e.what() << '\n';
    }
    results.push_back(r);
  }
  if (json) {
    out << nlohmann::json{{"schema_version", kSchemaVersion}, {"seed", seed}, {"results", results},
                          {"passed", passed}, {"total", total}}
               .dump(2)
        << '\n';
  } else {
    out << passed << "/" << total << " passed (seed " << seed << ")\n";
  }
  return passed == total ? kOk : kFailure;
}

// --- catalog ----------------------------------------------------------------

inline int cmd_catalog(int m, bool json, std::ostream& out, std::ostream& err) {
  if (m < 3) {
    err << "error: --m must be at least 3\n";
    return kUsage;
  }
  const auto labels = irrep_catalog(m);
  int sum = 0;
  for (const auto& l : labels) sum += l.dimension() * l.dimension();
  if (json) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& l : labels) classes.push_back({{"label", label_to_json(l)}, {"dimension", l.dimension()}});
    out << nlohmann::json{{"m", m}, {"classes", classes}, {"sum_dim_squared", sum}, {"group_order", 2 * m}}.dump(2)
        << '\n';
    return kOk;
  }
  out << "Γ(D_" << m << "): " << labels.size() << " irreducible classes\n";
  for (const auto& l : labels) out << "  " << pad(l.pretty(), 12) << "dim " << l.dimension() << '\n';
  out << "Σ dim² = " << sum << " = 2·" << m << '\n';
  return sum == 2 * m ? kOk : kFailure;
}

}  // namespace qrep::cli
