#pragma once

#include <string>
#include <vector>

#include "branecalc/model.hpp"

namespace branecalc {

// Names of the models compiled into the library.
const std::vector<std::string>& builtin_model_names();
bool is_builtin_model(const std::string& name);
GepnerModel load_builtin_model(const std::string& name);

// Flat key/value model-definition format:
//   name <string>
//   levels <5 ints>
//   intersection <c111 c112 b1 b2>
//   fiber_pairing <HH HL LL>
//   monodromy <6 rationals>          (six lines, row-major)
//   relation <K ints> pivot <index>  (optional, one line per generator)
// '#' starts a comment. Every diagnostic carries the offending line.
GepnerModel parse_model(const std::string& text, const std::string& origin);
std::string save_model(const GepnerModel& model);

// Resolution order: builtin name, then file in the directories listed in
// BRANECALC_MODEL_PATH (colon separated, optional), then a literal path.
GepnerModel load_model(const std::string& name_or_path);

// Builtins plus any *.model files found on BRANECALC_MODEL_PATH.
struct ModelListing {
  std::string name;
  std::string source;  // "builtin" or the file path
  int big_k = 0;
  std::array<int, 5> levels{};
  std::array<int, 5> weights{};
  bool has_relations = false;
};
std::vector<ModelListing> list_models();

}  // namespace branecalc
