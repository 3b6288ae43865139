#pragma once

// Machine-readable decomposition reports (schema "1.0").

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrep/errors.hpp"
#include "qrep/irrep_label.hpp"
#include "qrep/linalg.hpp"

namespace qrep {

inline constexpr const char* kSchemaVersion = "1.0";

struct ReportMember {
  std::string name;
  std::vector<Scalar> generator_vector;
  double residual = 0.0;

  friend bool operator==(const ReportMember&, const ReportMember&) = default;
};

/// One isomorphism class of components with its multiplicity.
struct ReportComponent {
  std::optional<IrrepLabel> label;
  int dimension = 0;
  int multiplicity = 0;
  std::vector<Scalar> generator_vector;
  std::vector<ReportMember> members;

  friend bool operator==(const ReportComponent&, const ReportComponent&) = default;
};

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  int n = 0;
  std::string quandle_kind;
  std::vector<ReportComponent> components;
  double residual_max = 0.0;
  std::uint64_t seed = 0;

  int total_dimension() const {
    int sum = 0;
    for (const auto& c : components) sum += c.dimension * c.multiplicity;
    return sum;
  }

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline std::vector<Scalar> to_std_vector(const Vector& v) {
  return {v.data(), v.data() + v.size()};
}

// --- JSON -------------------------------------------------------------------

inline nlohmann::json label_to_json(const std::optional<IrrepLabel>& label) {
  if (!label) return {{"kind", "unlabeled"}};
  if (label->kind() == IrrepLabel::Kind::C) return {{"kind", "C"}, {"lambda", label->lambda()}, {"mu", label->mu()}};
  return {{"kind", "W"}, {"m", label->m()}, {"s", label->s()}};
}

inline std::optional<IrrepLabel> label_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "unlabeled") return std::nullopt;
  if (kind == "C") return IrrepLabel::one_dim(j.at("lambda").get<int>(), j.at("mu").get<int>());
  if (kind == "W") return IrrepLabel::two_dim(j.at("m").get<int>(), j.at("s").get<int>());
  throw domain_error("report: unknown label kind '" + kind + "'");
}

inline nlohmann::json vector_to_json(const std::vector<Scalar>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

inline std::vector<Scalar> vector_from_json(const nlohmann::json& j) {
  std::vector<Scalar> out;
  for (const auto& pair : j) out.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  return out;
}

inline nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : doc.components) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : c.members)
      members.push_back({{"name", m.name}, {"generator_vector", vector_to_json(m.generator_vector)}, {"residual", m.residual}});
    comps.push_back({{"label", label_to_json(c.label)},
                     {"dimension", c.dimension},
                     {"multiplicity", c.multiplicity},
                     {"generator_vector", vector_to_json(c.generator_vector)},
                     {"members", members}});
  }
  return {{"schema_version", doc.schema_version}, {"n", doc.n},
          {"quandle_kind", doc.quandle_kind},     {"components", comps},
          {"residual_max", doc.residual_max},     {"seed", doc.seed}};
}

inline ReportDocument report_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  if (doc.schema_version != kSchemaVersion) throw domain_error("report: unsupported schema_version " + doc.schema_version);
  doc.n = j.at("n").get<int>();
  doc.quandle_kind = j.at("quandle_kind").get<std::string>();
  doc.residual_max = j.at("residual_max").get<double>();
  doc.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& cj : j.at("components")) {
    ReportComponent c;
    c.label = label_from_json(cj.at("label"));
    c.dimension = cj.at("dimension").get<int>();
    c.multiplicity = cj.at("multiplicity").get<int>();
    c.generator_vector = vector_from_json(cj.at("generator_vector"));
    for (const auto& mj : cj.at("members"))
      c.members.push_back({mj.at("name").get<std::string>(), vector_from_json(mj.at("generator_vector")),
                           mj.at("residual").get<double>()});
    doc.components.push_back(std::move(c));
  }
  if (doc.total_dimension() != doc.n) throw domain_error("report: component dimensions do not sum to n");
  return doc;
}

inline nlohmann::json label_counts_to_json(const LabelCounts& counts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [label, mult] : counts) out.push_back({{"label", label_to_json(label)}, {"multiplicity", mult}});
  return out;
}

}  // namespace qrep
