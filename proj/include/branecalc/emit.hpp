#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "branecalc/charge.hpp"
#include "branecalc/ext.hpp"
#include "branecalc/gepner.hpp"
#include "branecalc/geometry.hpp"
#include "branecalc/registry.hpp"
#include "branecalc/ring.hpp"

namespace branecalc {

enum class OutputFormat { kJson, kCsv, kTable };
OutputFormat output_format_from_string(const std::string& name);

// deterministic serialization (sorted keys, fixed indent, trailing newline)
std::string emit_json(const nlohmann::json& doc);

// sparse {exponent: coefficient} map with a basis tag; uses the g-basis when
// every odd shift slot vanishes, the r-basis otherwise
nlohmann::json json_ring_element(const RingElement& element);
nlohmann::json json_charge_vector(const ChargeVector& n);
nlohmann::json json_gepner_charge(const std::vector<BigInt>& q);
nlohmann::json json_divisor(const DivisorClass& d);
nlohmann::json json_curve(const CurveClass& c);

nlohmann::json json_charge_table(const GepnerModel& model,
                                 const std::array<int, 5>& labels,
                                 const std::vector<ChargeRow>& rows);
// header pinned to M,n6,n41,n42,n0,n21,n22
std::string csv_charge_table(const std::vector<ChargeRow>& rows);
std::string table_charge_table(const std::vector<ChargeRow>& rows);

nlohmann::json json_model_list(const std::vector<ModelListing>& listings);
std::string csv_model_list(const std::vector<ModelListing>& listings);
std::string table_model_list(const std::vector<ModelListing>& listings);

nlohmann::json json_quiver_paths(const std::vector<QuiverPath>& paths);
std::string csv_quiver_paths(const std::vector<QuiverPath>& paths);
std::string table_quiver_paths(const std::vector<QuiverPath>& paths);

// generic fallback renderer: flattens a json object into key: value lines
std::string table_from_json(const nlohmann::json& doc);

}  // namespace branecalc
