#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "branecalc/charge.hpp"
#include "branecalc/emit.hpp"
#include "branecalc/errors.hpp"
#include "branecalc/registry.hpp"
#include "branecalc/report.hpp"

using branecalc::GepnerModel;

namespace {

std::string definition_without(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key, 0) == 0) continue;
    out << line << "\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("model definitions round-trip") {
  for (const char* name : {"p11222-8", "p11226-12"}) {
    GepnerModel original = branecalc::load_builtin_model(name);
    std::string text = branecalc::save_model(original);
    GepnerModel reloaded = branecalc::parse_model(text, "roundtrip");
    CHECK(reloaded.name == original.name);
    CHECK(reloaded.big_k == original.big_k);
    for (int j = 0; j < 5; ++j) {
      CHECK(reloaded.factors[j].level == original.factors[j].level);
      CHECK(reloaded.factors[j].weight == original.factors[j].weight);
    }
    CHECK(reloaded.monodromy.m == original.monodromy.m);
    CHECK(reloaded.monodromy.m_inverse == original.monodromy.m_inverse);
    CHECK(reloaded.ring.c111 == original.ring.c111);
    CHECK(reloaded.ring.b2 == original.ring.b2);
    CHECK(reloaded.ring.fiber_hh == original.ring.fiber_hh);
    CHECK(reloaded.relations.has_value() == original.relations.has_value());
    if (original.relations.has_value()) {
      CHECK(reloaded.relations->generators().size() ==
            original.relations->generators().size());
      // and the save of the reload is byte-identical
      CHECK(branecalc::save_model(reloaded) == text);
    }
  }
}

TEST_CASE("model parser diagnostics carry the line") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  std::string good = branecalc::save_model(model);

  // wrong arity on levels
  std::string bad_levels = good;
  std::size_t pos = bad_levels.find("levels 6 6 2 2 2");
  REQUIRE(pos != std::string::npos);
  bad_levels.replace(pos, 16, "levels 6 6 2 2");
  CHECK_THROWS_WITH_AS(branecalc::parse_model(bad_levels, "t"),
                       doctest::Contains("t:3"), branecalc::ParseError);

  // unknown key
  CHECK_THROWS_WITH_AS(branecalc::parse_model(good + "bogus 1\n", "t"),
                       doctest::Contains("unknown key"), branecalc::ParseError);

  // missing monodromy rows
  CHECK_THROWS_WITH_AS(
      branecalc::parse_model(definition_without(good, "monodromy"), "t"),
      doctest::Contains("monodromy"), branecalc::ParseError);

  // singular monodromy
  std::string singular = definition_without(good, "monodromy");
  for (int i = 0; i < 6; ++i) singular += "monodromy 1 1 1 1 1 1\n";
  CHECK_THROWS_WITH_AS(branecalc::parse_model(singular, "t"),
                       doctest::Contains("singular"), branecalc::ParseError);

  // dependent relations
  std::string dependent = definition_without(good, "relation");
  dependent += "relation 1 0 1 0 1 0 1 0 pivot 6\n";
  dependent += "relation 1 0 1 0 1 0 1 0 pivot 6\n";
  CHECK_THROWS_AS(branecalc::parse_model(dependent, "t"),
                  branecalc::ParseError);

  // bad rational token
  std::string bad_token = definition_without(good, "intersection");
  bad_token += "intersection 8 4 56 x\n";
  CHECK_THROWS_AS(branecalc::parse_model(bad_token, "t"),
                  branecalc::ParseError);
}

TEST_CASE("models resolve through the search path") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "branecalc-test-models";
  fs::create_directories(dir);
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  model.name = "custom-8";
  {
    std::ofstream out(dir / "custom-8.model");
    out << branecalc::save_model(model);
  }
  setenv("BRANECALC_MODEL_PATH", dir.string().c_str(), 1);
  GepnerModel loaded = branecalc::load_model("custom-8");
  CHECK(loaded.name == "custom-8");
  CHECK(loaded.big_k == 8);

  std::vector<branecalc::ModelListing> listings = branecalc::list_models();
  bool found = false;
  for (const branecalc::ModelListing& l : listings) {
    if (l.name == "custom-8") found = true;
  }
  CHECK(found);
  unsetenv("BRANECALC_MODEL_PATH");

  CHECK_THROWS_AS(branecalc::load_model("no-such-model"),
                  branecalc::ParseError);
}

TEST_CASE("charge table CSV uses the fixed header") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  std::vector<branecalc::ChargeRow> rows =
      branecalc::charge_table(model, {1, 0, 0, 0, 0});
  std::string csv = branecalc::csv_charge_table(rows);
  CHECK(csv.rfind("M,n6,n41,n42,n0,n21,n22\n", 0) == 0);
  // one line per row plus the header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}

TEST_CASE("ring elements emit sparse maps with a basis tag") {
  branecalc::RingElement even(16);
  even.add_term(0, branecalc::BigInt(1));
  even.add_term(14, branecalc::BigInt(-2));
  nlohmann::json g = branecalc::json_ring_element(even);
  CHECK(g["basis"] == "g");
  CHECK(g["order"] == 8);
  CHECK(g["coeffs"]["0"] == "1");
  CHECK(g["coeffs"]["7"] == "-2");

  branecalc::RingElement odd = branecalc::RingElement::monomial(16, 3);
  nlohmann::json r = branecalc::json_ring_element(odd);
  CHECK(r["basis"] == "r");
  CHECK(r["order"] == 16);
  CHECK(r["coeffs"]["3"] == "1");
}

TEST_CASE("emitters are deterministic") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  std::vector<branecalc::ChargeRow> rows =
      branecalc::charge_table(model, {1, 0, 0, 0, 0});
  std::string a = branecalc::emit_json(
      branecalc::json_charge_table(model, {1, 0, 0, 0, 0}, rows));
  std::string b = branecalc::emit_json(
      branecalc::json_charge_table(model, {1, 0, 0, 0, 0},
                                   branecalc::charge_table(model, {1, 0, 0, 0, 0})));
  CHECK(a == b);
  branecalc::Report r1 = branecalc::report_all();
  branecalc::Report r2 = branecalc::report_all();
  CHECK(branecalc::emit_json(r1.doc) == branecalc::emit_json(r2.doc));
}

TEST_CASE("reports are structurally complete") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");

  branecalc::Report charges = branecalc::report_charge_tables(model);
  REQUIRE(charges.doc["tables"].size() == 2);
  CHECK(charges.doc["tables"][0]["rows"].size() == 8);
  CHECK(charges.doc["tables"][0]["reference"].size() == 8);
  CHECK(charges.doc["tables"][1]["reference"].size() == 2);
  for (const auto& table : charges.doc["tables"]) {
    CHECK(table.contains("comparison"));
    CHECK(table["comparison"].contains("match"));
  }

  branecalc::Report ground = branecalc::report_ground_intersection(model);
  CHECK(ground.doc.contains("computed"));
  CHECK(ground.doc.contains("reference"));
  CHECK(ground.doc["computed_at_g_equals_1"] == "0");
  CHECK(ground.doc.contains("computed_reduced"));

  branecalc::Report marginal = branecalc::report_marginal_table();
  REQUIRE(marginal.doc["rows"].size() == 14);
  for (const auto& row : marginal.doc["rows"]) {
    CHECK(row.contains("reference"));
    CHECK(row.contains("match"));
    CHECK((row.contains("computed") || row.contains("computed_fallback")));
  }

  branecalc::Report mukai = branecalc::report_mukai_dictionary();
  REQUIRE(mukai.doc["entries"].size() == 3);
  for (const auto& entry : mukai.doc["entries"]) {
    CHECK(entry.contains("dictionary"));
    CHECK(entry.contains("reference"));
    CHECK(entry.contains("match"));
  }
  // the dictionary reproduces the half-E component of the first-orbit rows
  CHECK(mukai.doc["entries"][0]["match"]["c1"] == true);
  CHECK(mukai.doc["entries"][1]["match"]["c1"] == true);
  // ch3 differs: 2/3 and 5/3 against the quoted 8/3 on the reference side
  CHECK(mukai.doc["entries"][0]["dictionary"]["ch3"] == "2/3");
  CHECK(mukai.doc["entries"][0]["match"]["ch3"] == false);
  CHECK(mukai.doc["entries"][1]["dictionary"]["ch3"] == "5/3");
  // second-orbit multiple-brane row: ch2 = h - 2l matches
  CHECK(mukai.doc["entries"][2]["match"]["ch2"] == true);
}
