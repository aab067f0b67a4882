// branecalc - exact D-brane charge and intersection data for the
// two-parameter K3-fibered Calabi-Yau models.

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "branecalc/charge.hpp"
#include "branecalc/emit.hpp"
#include "branecalc/errors.hpp"
#include "branecalc/ext.hpp"
#include "branecalc/gepner.hpp"
#include "branecalc/geometry.hpp"
#include "branecalc/registry.hpp"
#include "branecalc/report.hpp"

namespace {

using branecalc::OutputFormat;

// exit codes: 0 ok, 1 usage, 2 domain error, 3 discrepancy-report-only
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitDiscrepancy = 3;

// malformed flag values are usage errors, not domain errors
struct UsageError {
  std::string message;
};

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError{"empty entry in list '" + text + "'"};
    try {
      out.push_back(branecalc::BigInt::from_string(item).to_int64());
    } catch (const branecalc::Error&) {
      throw UsageError{"'" + item + "' is not an integer"};
    }
  }
  return out;
}

std::vector<branecalc::Rational> parse_rational_list(const std::string& text) {
  std::vector<branecalc::Rational> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(branecalc::Rational::from_string(item));
    } catch (const branecalc::Error&) {
      throw UsageError{"'" + item + "' is not a rational (use p/q or n)"};
    }
  }
  return out;
}

std::array<int, 5> parse_l_labels(const std::string& text) {
  std::vector<long long> values = parse_int_list(text);
  if (values.size() != 5)
    throw UsageError{"--L requires 5 comma-separated labels"};
  std::array<int, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = static_cast<int>(values[i]);
  return out;
}

// state syntax: L1,L2,L3,L4,L5,M[,S]
branecalc::BoundaryState parse_state(const std::string& text) {
  std::vector<long long> values = parse_int_list(text);
  if (values.size() != 6 && values.size() != 7)
    throw UsageError{"state '" + text + "' must be L1,L2,L3,L4,L5,M[,S]"};
  branecalc::BoundaryState s;
  for (std::size_t i = 0; i < 5; ++i) s.l[i] = static_cast<int>(values[i]);
  s.m = static_cast<int>(values[5]);
  s.s = values.size() == 7 ? static_cast<int>(values[6]) : 0;
  return s;
}

void print(const std::string& text) { std::cout << text; }

void print_json_or_table(const nlohmann::json& doc, OutputFormat format) {
  if (format == OutputFormat::kCsv)
    throw branecalc::LabelRangeError("csv output is not defined for this command");
  if (format == OutputFormat::kJson) {
    print(branecalc::emit_json(doc));
  } else {
    print(branecalc::table_from_json(doc));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact charge-lattice and intersection-index calculator for "
               "the two-parameter K3-fibered models"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  app.add_option("--format", format_name, "output format: json, csv or table")
      ->capture_default_str();

  std::string model_name = "p11222-8";
  std::string state1_text, state2_text, method = "g";
  std::string l_text, n_text, t1_text = "0", t2_text = "0";
  std::string state_text, interpretation_name = "reduced-half-abs";
  std::string split_text, table_file, c1_text = "0,0", c2_text = "0";
  std::string r_text = "0", sub_text, whole_text, omega_text = "1,0";
  std::string report_kind = "all";
  int m_value = -1;
  bool all_m = false;
  int quiver_from = 0, quiver_to = 0, quiver_max_len = 1;
  int stability_dim = 3;

  auto* models = app.add_subcommand("models", "model registry");
  auto* models_list = models->add_subcommand("list", "list available models");
  auto* models_show =
      models->add_subcommand("show", "print a model definition file");
  models_show->add_option("--model", model_name, "model name or path");

  auto* charge = app.add_subcommand(
      "charge", "Gepner-basis and large-radius charges of boundary states");
  charge->add_option("--model", model_name, "model name or path");
  charge->add_option("--L", l_text, "five comma-separated L labels")
      ->required();
  CLI::Option* m_option = charge->add_option("--M", m_value, "single M label");
  charge->add_flag("--all-M", all_m, "every admissible M value")
      ->excludes(m_option);

  auto* intersect = app.add_subcommand(
      "intersect", "intersection index element between two boundary states");
  intersect->add_option("--model", model_name, "model name or path");
  intersect->add_option("--state1", state1_text, "L1..L5,M[,S]")->required();
  intersect->add_option("--state2", state2_text, "L1..L5,M[,S]")->required();
  intersect->add_option("--method", method, "g (shift matrix) or direct");

  auto* marginal = app.add_subcommand(
      "marginal", "marginal-operator count of a boundary state");
  marginal->add_option("--model", model_name, "model name or path");
  marginal
      ->add_option("--state", state_text,
                   "2, 3 or 5 comma-separated L labels")
      ->required();
  marginal->add_option("--interpretation", interpretation_name,
                       "reduced-half-abs, projected-half-abs or "
                       "element-half-abs");

  auto* central = app.add_subcommand("central-charge",
                                     "Z(n) = n . Pi(t1, t2), exact");
  central->add_option("--model", model_name, "model name or path");
  central->add_option("--n", n_text, "n6,n41,n42,n0,n21,n22")->required();
  central->add_option("--t1", t1_text, "rational Kaehler parameter");
  central->add_option("--t2", t2_text, "rational Kaehler parameter");

  auto* ext = app.add_subcommand("ext", "Ext-group dimension calculators");
  auto* ext_normal =
      ext->add_subcommand("normal", "rational-curve normal bundle case");
  ext_normal->add_option("--split", split_text, "a,b with a+b=-2")->required();
  auto* ext_spectral = ext->add_subcommand(
      "spectral", "assemble Ext^n from a cohomology table file");
  ext_spectral
      ->add_option("--table", table_file,
                   "JSON file {\"h\": [[...], ...]} with h[p][q]")
      ->required();

  auto* mukai = app.add_subcommand(
      "mukai", "fiber Mukai vector, self-pairing and moduli dimension");
  mukai->add_option("--model", model_name, "model name or path");
  mukai->add_option("--r", r_text, "rank (rational)");
  mukai->add_option("--c1", c1_text, "divisor a,b meaning a*H + b*L");
  mukai->add_option("--c2", c2_text, "second Chern number (rational)");

  auto* stability =
      app.add_subcommand("stability", "slope comparison of sub vs whole");
  stability->add_option("--model", model_name, "model name or path");
  stability->add_option("--sub", sub_text, "ch0,a,b of the subsheaf")
      ->required();
  stability->add_option("--whole", whole_text, "ch0,a,b of the sheaf")
      ->required();
  stability->add_option("--omega", omega_text, "Kaehler class a,b");
  stability->add_option("--dim", stability_dim, "2 (fiber) or 3 (ambient)");

  auto* quiver = app.add_subcommand("quiver", "D0-D2-D4-D6 quiver");
  auto* quiver_paths_cmd =
      quiver->add_subcommand("paths", "composable paths between vertices");
  quiver_paths_cmd->add_option("--from", quiver_from, "vertex 0, 2, 4 or 6")
      ->required();
  quiver_paths_cmd->add_option("--to", quiver_to, "vertex 0, 2, 4 or 6")
      ->required();
  quiver_paths_cmd->add_option("--max-len", quiver_max_len,
                               "maximum path length");

  auto* report = app.add_subcommand(
      "report", "audit computed values against the reference tables");
  report->add_option("kind", report_kind,
                     "charges, ground, marginal, mukai or all");
  report->add_option("--model", model_name, "model name or path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    OutputFormat format;
    try {
      format = branecalc::output_format_from_string(format_name);
    } catch (const branecalc::Error& e) {
      throw UsageError{e.what()};
    }

    if (models_list->parsed()) {
      std::vector<branecalc::ModelListing> listings = branecalc::list_models();
      if (format == OutputFormat::kJson)
        print(branecalc::emit_json(branecalc::json_model_list(listings)));
      else if (format == OutputFormat::kCsv)
        print(branecalc::csv_model_list(listings));
      else
        print(branecalc::table_model_list(listings));
      return kExitOk;
    }
    if (models_show->parsed()) {
      print(branecalc::save_model(branecalc::load_model(model_name)));
      return kExitOk;
    }

    if (charge->parsed()) {
      branecalc::GepnerModel model = branecalc::load_model(model_name);
      std::array<int, 5> labels = parse_l_labels(l_text);
      std::vector<branecalc::ChargeRow> rows;
      if (all_m || m_value < 0) {
        rows = branecalc::charge_table(model, labels);
      } else {
        branecalc::BoundaryState s;
        s.l = labels;
        s.m = m_value;
        branecalc::ChargeRow row;
        row.m = m_value;
        row.gepner = branecalc::boundary_state_charge(model, s);
        row.large_radius = branecalc::to_large_radius(model, row.gepner);
        rows.push_back(std::move(row));
      }
      if (format == OutputFormat::kJson)
        print(branecalc::emit_json(
            branecalc::json_charge_table(model, labels, rows)));
      else if (format == OutputFormat::kCsv)
        print(branecalc::csv_charge_table(rows));
      else
        print(branecalc::table_charge_table(rows));
      return kExitOk;
    }

    if (intersect->parsed()) {
      if (method != "direct" && method != "g")
        throw UsageError{"--method must be g or direct"};
      branecalc::GepnerModel model = branecalc::load_model(model_name);
      branecalc::BoundaryState s1 = parse_state(state1_text);
      branecalc::BoundaryState s2 = parse_state(state2_text);
      branecalc::RingElement element =
          method == "direct"
              ? branecalc::intersection_index_direct(model, s1, s2)
              : branecalc::intersection_index_element(model, s1, s2);
      nlohmann::json doc = {
          {"model", model.name},
          {"method", method},
          {"element", branecalc::json_ring_element(element)},
          {"at_g_equals_1", element.coefficient_sum().str()}};
      print_json_or_table(doc, format);
      return kExitOk;
    }

    if (marginal->parsed()) {
      branecalc::GepnerModel model = branecalc::load_model(model_name);
      std::vector<long long> raw = parse_int_list(state_text);
      std::vector<int> labels(raw.begin(), raw.end());
      branecalc::MarginalInterpretation interpretation;
      try {
        interpretation =
            branecalc::marginal_interpretation_from_string(interpretation_name);
      } catch (const branecalc::Error& e) {
        throw UsageError{e.what()};
      }
      branecalc::MarginalCount count =
          branecalc::marginal_count(model, labels, interpretation);
      nlohmann::json doc = {{"model", model.name},
                            {"interpretation", interpretation_name},
                            {"factors", count.factors_note},
                            {"marginal", count.marginal},
                            {"vac", count.vac},
                            {"half_exact", count.half_exact}};
      print_json_or_table(doc, format);
      return kExitOk;
    }

    if (central->parsed()) {
      branecalc::GepnerModel model = branecalc::load_model(model_name);
      std::vector<branecalc::Rational> n = parse_rational_list(n_text);
      if (n.size() != 6)
        throw branecalc::ParseError("--n requires 6 comma-separated values");
      branecalc::ChargeVector charge_vector;
      for (std::size_t i = 0; i < 6; ++i) charge_vector.n[i] = n[i];
      branecalc::Rational t1 = branecalc::Rational::from_string(t1_text);
      branecalc::Rational t2 = branecalc::Rational::from_string(t2_text);
      std::array<branecalc::Rational, 6> pi =
          branecalc::period_vector(model.ring, t1, t2);
      nlohmann::json jpi = nlohmann::json::array();
      for (const branecalc::Rational& v : pi) jpi.push_back(v.str());
      nlohmann::json doc = {
          {"model", model.name},
          {"t1", t1.str()},
          {"t2", t2.str()},
          {"period_vector", jpi},
          {"Z", branecalc::central_charge(model.ring, charge_vector, t1, t2)
                    .str()}};
      print_json_or_table(doc, format);
      return kExitOk;
    }

    if (ext_normal->parsed()) {
      std::vector<long long> values = parse_int_list(split_text);
      if (values.size() != 2)
        throw branecalc::ParseError("--split requires a,b");
      branecalc::NormalBundleSplit split{static_cast<int>(values[0]),
                                         static_cast<int>(values[1])};
      branecalc::NormalExt result = branecalc::normal_bundle_ext(split);
      branecalc::SuperpotentialForm form = branecalc::superpotential_form(split);
      branecalc::LineCohomology ca = branecalc::line_cohomology_p1(split.a);
      branecalc::LineCohomology cb = branecalc::line_cohomology_p1(split.b);
      nlohmann::json doc = {
          {"split", {split.a, split.b}},
          {"ext1", result.ext1},
          {"ext2", result.ext2},
          {"h0", {ca.h0, cb.h0}},
          {"h1", {ca.h1, cb.h1}},
          {"superpotential", form.form},
          {"deformation_params", form.deformation_params},
          {"classified", form.classified}};
      print_json_or_table(doc, format);
      return kExitOk;
    }

    if (ext_spectral->parsed()) {
      std::ifstream in(table_file);
      if (!in)
        throw branecalc::ParseError("cannot open table file '" + table_file +
                                    "'");
      nlohmann::json parsed;
      try {
        in >> parsed;
      } catch (const nlohmann::json::exception& e) {
        throw branecalc::ParseError("table file '" + table_file +
                                    "': " + e.what());
      }
      if (!parsed.contains("h") || !parsed["h"].is_array())
        throw branecalc::ParseError("table file needs an \"h\" array of rows");
      branecalc::CohomologyTable table;
      try {
        for (const auto& row : parsed["h"]) {
          std::vector<long long> r;
          for (const auto& v : row) r.push_back(v.get<long long>());
          table.h.push_back(std::move(r));
        }
      } catch (const nlohmann::json::exception& e) {
        throw branecalc::ParseError("table file '" + table_file +
                                    "': " + e.what());
      }
      std::vector<long long> ext = branecalc::ext_via_spectral(table);
      nlohmann::json jext = nlohmann::json::array();
      for (long long v : ext) jext.push_back(v);
      nlohmann::json doc = {
          {"ext", jext},
          {"euler", branecalc::euler_characteristic(table)}};
      print_json_or_table(doc, format);
      return kExitOk;
    }

    if (mukai->parsed()) {
      branecalc::GepnerModel model = branecalc::load_model(model_name);
      std::vector<branecalc::Rational> c1 = parse_rational_list(c1_text);
      if (c1.size() != 2)
        throw branecalc::ParseError("--c1 requires a,b");
      branecalc::DivisorClass divisor{c1[0], c1[1]};
      branecalc::FiberMukaiVector v = branecalc::mukai_vector(
          model.ring, branecalc::Rational::from_string(r_text), divisor,
          branecalc::Rational::from_string(c2_text));
      nlohmann::json doc = {
          {"model", model.name},
          {"vector",
           {{"rank", v.rank.str()},
            {"c1", branecalc::json_divisor(v.c1)},
            {"s", v.s.str()}}},
          {"self_pairing", branecalc::mukai_pairing(model.ring, v, v).str()},
          {"moduli_dimension",
           branecalc::moduli_dimension(model.ring, v).str()}};
      print_json_or_table(doc, format);
      return kExitOk;
    }

    if (stability->parsed()) {
      branecalc::GepnerModel model = branecalc::load_model(model_name);
      auto parse_sheaf = [](const std::string& text) {
        std::vector<branecalc::Rational> values = parse_rational_list(text);
        if (values.size() != 3)
          throw branecalc::ParseError("sheaf data must be ch0,a,b");
        return branecalc::SheafSlopeData{values[0], {values[1], values[2]}};
      };
      branecalc::SheafSlopeData sub = parse_sheaf(sub_text);
      branecalc::SheafSlopeData whole = parse_sheaf(whole_text);
      std::vector<branecalc::Rational> omega_values =
          parse_rational_list(omega_text);
      if (omega_values.size() != 2)
        throw branecalc::ParseError("--omega requires a,b");
      branecalc::DivisorClass omega{omega_values[0], omega_values[1]};
      branecalc::Rational mu_sub = branecalc::slope(
          model.ring, sub.ch0, sub.c1, omega, stability_dim);
      branecalc::Rational mu_whole = branecalc::slope(
          model.ring, whole.ch0, whole.c1, omega, stability_dim);
      nlohmann::json doc = {
          {"model", model.name},
          {"mu_sub", mu_sub.str()},
          {"mu_whole", mu_whole.str()},
          {"semistable", mu_sub <= mu_whole}};
      print_json_or_table(doc, format);
      return kExitOk;
    }

    if (quiver_paths_cmd->parsed()) {
      std::vector<branecalc::QuiverPath> paths = branecalc::quiver_paths(
          branecalc::Quiver::d_brane_chain(), quiver_from, quiver_to,
          quiver_max_len);
      if (format == OutputFormat::kJson)
        print(branecalc::emit_json(branecalc::json_quiver_paths(paths)));
      else if (format == OutputFormat::kCsv)
        print(branecalc::csv_quiver_paths(paths));
      else
        print(branecalc::table_quiver_paths(paths));
      return kExitOk;
    }

    if (report->parsed()) {
      branecalc::Report result;
      if (report_kind == "charges") {
        result =
            branecalc::report_charge_tables(branecalc::load_model(model_name));
      } else if (report_kind == "ground") {
        result = branecalc::report_ground_intersection(
            branecalc::load_model(model_name));
      } else if (report_kind == "marginal") {
        result = branecalc::report_marginal_table();
      } else if (report_kind == "mukai") {
        result = branecalc::report_mukai_dictionary();
      } else if (report_kind == "all") {
        result = branecalc::report_all();
      } else {
        throw branecalc::LabelRangeError(
            "report kind must be charges, ground, marginal, mukai or all");
      }
      print_json_or_table(result.doc,
                          format == OutputFormat::kTable ? OutputFormat::kJson
                                                         : format);
      return result.all_match ? kExitOk : kExitDiscrepancy;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const branecalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  std::cerr << "error: no subcommand executed\n";
  return kExitUsage;
}
