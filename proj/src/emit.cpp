#include "branecalc/emit.hpp"

#include <sstream>

#include "branecalc/errors.hpp"

namespace branecalc {

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "table") return OutputFormat::kTable;
  throw LabelRangeError("unknown output format '" + name +
                        "' (expected json, csv or table)");
}

std::string emit_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

nlohmann::json json_ring_element(const RingElement& element) {
  nlohmann::json coeffs = nlohmann::json::object();
  bool even_only = true;
  for (const auto& [slot, c] : element.terms()) {
    if (slot % 2 != 0) {
      even_only = false;
      break;
    }
  }
  if (even_only) {
    for (const auto& [slot, c] : element.terms())
      coeffs[std::to_string(slot / 2)] = c.str();
    return {{"basis", "g"},
            {"order", element.order() / 2},
            {"coeffs", coeffs}};
  }
  for (const auto& [slot, c] : element.terms())
    coeffs[std::to_string(slot)] = c.str();
  return {{"basis", "r"}, {"order", element.order()}, {"coeffs", coeffs}};
}

nlohmann::json json_charge_vector(const ChargeVector& n) {
  return {{"n6", n.n6().str()},   {"n41", n.n41().str()},
          {"n42", n.n42().str()}, {"n0", n.n0().str()},
          {"n21", n.n21().str()}, {"n22", n.n22().str()},
          {"integral", n.is_integral()}};
}

nlohmann::json json_gepner_charge(const std::vector<BigInt>& q) {
  nlohmann::json out = nlohmann::json::array();
  for (const BigInt& c : q) out.push_back(c.str());
  return out;
}

nlohmann::json json_divisor(const DivisorClass& d) {
  std::array<Rational, 2> le = divisor_in_le_basis(d);
  return {{"H", d.a.str()},
          {"L", d.b.str()},
          {"le_basis", {{"L", le[0].str()}, {"E", le[1].str()}}},
          {"text", d.str()}};
}

nlohmann::json json_curve(const CurveClass& c) {
  return {{"h", c.c.str()}, {"l", c.d.str()}, {"text", c.str()}};
}

nlohmann::json json_charge_table(const GepnerModel& model,
                                 const std::array<int, 5>& labels,
                                 const std::vector<ChargeRow>& rows) {
  nlohmann::json jrows = nlohmann::json::array();
  for (const ChargeRow& row : rows) {
    jrows.push_back({{"M", row.m},
                     {"gepner", json_gepner_charge(row.gepner)},
                     {"large_radius", json_charge_vector(row.large_radius)}});
  }
  nlohmann::json jl = nlohmann::json::array();
  for (int l : labels) jl.push_back(l);
  return {{"model", model.name}, {"L", jl}, {"rows", jrows}};
}

std::string csv_charge_table(const std::vector<ChargeRow>& rows) {
  std::ostringstream out;
  out << "M,n6,n41,n42,n0,n21,n22\n";
  for (const ChargeRow& row : rows) {
    out << row.m;
    for (const Rational& c : row.large_radius.n) out << "," << c.str();
    out << "\n";
  }
  return out.str();
}

std::string table_charge_table(const std::vector<ChargeRow>& rows) {
  std::ostringstream out;
  out << " M    n6   n41   n42    n0   n21   n22\n";
  for (const ChargeRow& row : rows) {
    out << (row.m < 10 ? " " : "") << row.m << "  ";
    for (const Rational& c : row.large_radius.n) {
      std::string s = c.str();
      out << std::string(s.size() < 5 ? 5 - s.size() : 1, ' ') << s << " ";
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json json_model_list(const std::vector<ModelListing>& listings) {
  nlohmann::json out = nlohmann::json::array();
  for (const ModelListing& m : listings) {
    nlohmann::json levels = nlohmann::json::array();
    nlohmann::json weights = nlohmann::json::array();
    for (int v : m.levels) levels.push_back(v);
    for (int v : m.weights) weights.push_back(v);
    out.push_back({{"name", m.name},
                   {"source", m.source},
                   {"K", m.big_k},
                   {"M_modulus", 2 * m.big_k},
                   {"levels", levels},
                   {"weights", weights},
                   {"relations", m.has_relations}});
  }
  return {{"models", out}};
}

std::string csv_model_list(const std::vector<ModelListing>& listings) {
  std::ostringstream out;
  out << "name,source,K,M_modulus,levels,weights,relations\n";
  for (const ModelListing& m : listings) {
    out << m.name << "," << m.source << "," << m.big_k << "," << 2 * m.big_k
        << ",";
    for (std::size_t j = 0; j < 5; ++j) out << (j ? " " : "") << m.levels[j];
    out << ",";
    for (std::size_t j = 0; j < 5; ++j) out << (j ? " " : "") << m.weights[j];
    out << "," << (m.has_relations ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string table_model_list(const std::vector<ModelListing>& listings) {
  std::ostringstream out;
  for (const ModelListing& m : listings) {
    out << m.name << "  K=" << m.big_k << "  M in Z_" << 2 * m.big_k
        << "  levels";
    for (int v : m.levels) out << " " << v;
    out << "  weights";
    for (int v : m.weights) out << " " << v;
    out << "  relations " << (m.has_relations ? "yes" : "no") << "  ["
        << m.source << "]\n";
  }
  return out.str();
}

nlohmann::json json_quiver_paths(const std::vector<QuiverPath>& paths) {
  nlohmann::json out = nlohmann::json::array();
  for (const QuiverPath& p : paths) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const std::string& a : p.arrows) arrows.push_back(a);
    out.push_back({{"arrows", arrows},
                   {"length", p.arrows.size()},
                   {"text", p.str()}});
  }
  return {{"paths", out}};
}

std::string csv_quiver_paths(const std::vector<QuiverPath>& paths) {
  std::ostringstream out;
  out << "length,path\n";
  for (const QuiverPath& p : paths)
    out << p.arrows.size() << "," << p.str() << "\n";
  return out.str();
}

std::string table_quiver_paths(const std::vector<QuiverPath>& paths) {
  std::ostringstream out;
  for (const QuiverPath& p : paths) out << p.str() << "\n";
  return out.str();
}

namespace {

void flatten(const nlohmann::json& node, const std::string& prefix,
             std::ostringstream& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              out);
    }
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& item : node) {
      flatten(item, prefix + "[" + std::to_string(i++) + "]", out);
    }
  } else {
    out << prefix << ": "
        << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

}  // namespace

std::string table_from_json(const nlohmann::json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace branecalc
