#include "branecalc/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "branecalc/errors.hpp"

namespace branecalc {

namespace {

RationalMatrix matrix_from_rows(const char* const rows[6]) {
  RationalMatrix m(6);
  for (std::size_t i = 0; i < 6; ++i) {
    std::istringstream in(rows[i]);
    std::string token;
    for (std::size_t j = 0; j < 6; ++j) {
      in >> token;
      m.at(i, j) = Rational::from_string(token);
    }
  }
  return m;
}

GepnerModel make_p11222_8() {
  GepnerModel model;
  model.name = "p11222-8";
  model.factors = GepnerModel::make_factors({6, 6, 2, 2, 2}, &model.big_k);
  static const char* const kMonodromy[6] = {
      "-1 1 0 0 0 0",
      "2 2 1/2 1/2 1/2 1/2",
      "1 0 1 0 0 0",
      "1 0 0 0 0 0",
      "-1/2 0 1/4 0 -1/4 0",
      "1/2 1/2 -1/4 1/4 1/4 -1/4",
  };
  model.monodromy = MonodromyMatrix::from_matrix(matrix_from_rows(kMonodromy));
  // even and odd period sums vanish
  model.relations = RelationLattice(
      8, {{{1, 0, 1, 0, 1, 0, 1, 0}, 6}, {{0, 1, 0, 1, 0, 1, 0, 1}, 7}});
  model.ring = {Rational(8), Rational(4),  Rational(56), Rational(24),
                Rational(4), Rational(0),  Rational(0)};
  return model;
}

GepnerModel make_p11226_12() {
  GepnerModel model;
  model.name = "p11226-12";
  model.factors = GepnerModel::make_factors({10, 10, 4, 4, 0}, &model.big_k);
  static const char* const kMonodromy[6] = {
      "-1 1 0 0 0 0",
      "3/2 3/2 1/2 1/2 -1/2 -1/2",
      "1 0 1 0 0 0",
      "1 0 0 0 0 0",
      "-1/2 0 1/2 0 1/2 0",
      "1/2 1/2 -1/2 1/2 -1/2 1/2",
  };
  model.monodromy = MonodromyMatrix::from_matrix(matrix_from_rows(kMonodromy));
  // period relations for this model are not shipped; charge reduction is
  // unavailable until a definition file supplies them
  model.relations.reset();
  model.ring = {Rational(4), Rational(2), Rational(52), Rational(24),
                Rational(2), Rational(0), Rational(0)};
  return model;
}

std::vector<std::string> model_path_dirs() {
  std::vector<std::string> dirs;
  const char* raw = std::getenv("BRANECALC_MODEL_PATH");
  if (raw == nullptr) return dirs;
  std::string path(raw);
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find(':', start);
    if (end == std::string::npos) end = path.size();
    if (end > start) dirs.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  return dirs;
}

GepnerModel parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), path);
}

}  // namespace

const std::vector<std::string>& builtin_model_names() {
  static const std::vector<std::string> kNames = {"p11222-8", "p11226-12"};
  return kNames;
}

bool is_builtin_model(const std::string& name) {
  const auto& names = builtin_model_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

GepnerModel load_builtin_model(const std::string& name) {
  if (name == "p11222-8") return make_p11222_8();
  if (name == "p11226-12") return make_p11226_12();
  throw ParseError("unknown builtin model '" + name + "'");
}

GepnerModel parse_model(const std::string& text, const std::string& origin) {
  std::string name;
  std::array<int, 5> levels{};
  bool have_name = false, have_levels = false, have_intersection = false,
       have_fiber = false;
  std::array<Rational, 4> intersection;
  std::array<Rational, 3> fiber;
  std::vector<std::vector<Rational>> monodromy_rows;
  std::vector<RelationLattice::Generator> generators;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where =
        origin + ":" + std::to_string(line_no) + ": ";
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string key;
    if (!(tokens >> key)) continue;
    try {
      if (key == "name") {
        if (!(tokens >> name)) throw ParseError("name requires a value");
        have_name = true;
      } else if (key == "levels") {
        for (int& level : levels) {
          std::string tok;
          if (!(tokens >> tok))
            throw ParseError("levels requires 5 integers");
          level = static_cast<int>(BigInt::from_string(tok).to_int64());
        }
        std::string extra;
        if (tokens >> extra) throw ParseError("levels requires exactly 5 integers");
        have_levels = true;
      } else if (key == "intersection") {
        for (Rational& c : intersection) {
          std::string tok;
          if (!(tokens >> tok))
            throw ParseError("intersection requires c111 c112 b1 b2");
          c = Rational::from_string(tok);
        }
        have_intersection = true;
      } else if (key == "fiber_pairing") {
        for (Rational& c : fiber) {
          std::string tok;
          if (!(tokens >> tok))
            throw ParseError("fiber_pairing requires HH HL LL");
          c = Rational::from_string(tok);
        }
        have_fiber = true;
      } else if (key == "monodromy") {
        std::vector<Rational> row;
        std::string tok;
        while (tokens >> tok) row.push_back(Rational::from_string(tok));
        if (row.size() != 6)
          throw ParseError("monodromy row requires 6 rationals");
        monodromy_rows.push_back(std::move(row));
      } else if (key == "relation") {
        std::vector<std::string> toks;
        std::string tok;
        while (tokens >> tok) toks.push_back(tok);
        if (toks.size() < 3 || toks[toks.size() - 2] != "pivot")
          throw ParseError(
              "relation line must end with 'pivot <index>'");
        RelationLattice::Generator gen;
        gen.pivot = static_cast<int>(
            BigInt::from_string(toks.back()).to_int64());
        for (std::size_t i = 0; i + 2 < toks.size(); ++i)
          gen.coefficients.push_back(BigInt::from_string(toks[i]).to_int64());
        generators.push_back(std::move(gen));
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      throw ParseError(where + e.what());
    }
  }

  if (!have_name) throw ParseError(origin + ": missing 'name'");
  if (!have_levels) throw ParseError(origin + ": missing 'levels'");
  if (!have_intersection)
    throw ParseError(origin + ": missing 'intersection'");
  if (!have_fiber) throw ParseError(origin + ": missing 'fiber_pairing'");
  if (monodromy_rows.size() != 6)
    throw ParseError(origin + ": expected 6 monodromy rows, found " +
                     std::to_string(monodromy_rows.size()));

  GepnerModel model;
  model.name = name;
  try {
    model.factors = GepnerModel::make_factors(levels, &model.big_k);
  } catch (const Error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  RationalMatrix m(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = monodromy_rows[i][j];
  try {
    model.monodromy = MonodromyMatrix::from_matrix(std::move(m));
  } catch (const Error& e) {
    throw ParseError(origin + ": monodromy: " + e.what());
  }
  if (!generators.empty()) {
    try {
      model.relations = RelationLattice(model.big_k, std::move(generators));
    } catch (const Error& e) {
      throw ParseError(origin + ": relations: " + e.what());
    }
  }
  model.ring = {intersection[0], intersection[1], intersection[2],
                intersection[3], fiber[0],        fiber[1],
                fiber[2]};
  return model;
}

std::string save_model(const GepnerModel& model) {
  std::ostringstream out;
  out << "# branecalc model definition\n";
  out << "name " << model.name << "\n";
  out << "levels";
  for (const MinimalModelFactor& f : model.factors) out << " " << f.level;
  out << "\n";
  out << "intersection " << model.ring.c111.str() << " "
      << model.ring.c112.str() << " " << model.ring.b1.str() << " "
      << model.ring.b2.str() << "\n";
  out << "fiber_pairing " << model.ring.fiber_hh.str() << " "
      << model.ring.fiber_hl.str() << " " << model.ring.fiber_ll.str() << "\n";
  for (std::size_t i = 0; i < 6; ++i) {
    out << "monodromy";
    for (std::size_t j = 0; j < 6; ++j)
      out << " " << model.monodromy.m.at(i, j).str();
    out << "\n";
  }
  if (model.relations.has_value()) {
    for (const RelationLattice::Generator& gen :
         model.relations->generators()) {
      out << "relation";
      for (long long c : gen.coefficients) out << " " << c;
      out << " pivot " << gen.pivot << "\n";
    }
  }
  return out.str();
}

GepnerModel load_model(const std::string& name_or_path) {
  if (is_builtin_model(name_or_path)) return load_builtin_model(name_or_path);
  namespace fs = std::filesystem;
  for (const std::string& dir : model_path_dirs()) {
    for (const std::string& candidate :
         {name_or_path, name_or_path + ".model"}) {
      fs::path p = fs::path(dir) / candidate;
      std::error_code ec;
      if (fs::is_regular_file(p, ec)) return parse_model_file(p.string());
    }
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec))
    return parse_model_file(name_or_path);
  throw ParseError("model '" + name_or_path +
                   "' is neither a builtin name, a file on "
                   "BRANECALC_MODEL_PATH, nor a readable path");
}

std::vector<ModelListing> list_models() {
  std::vector<ModelListing> out;
  auto add = [&out](const GepnerModel& model, const std::string& source) {
    ModelListing listing;
    listing.name = model.name;
    listing.source = source;
    listing.big_k = model.big_k;
    for (std::size_t j = 0; j < 5; ++j) {
      listing.levels[j] = model.factors[j].level;
      listing.weights[j] = model.factors[j].weight;
    }
    listing.has_relations = model.relations.has_value();
    out.push_back(std::move(listing));
  };
  for (const std::string& name : builtin_model_names())
    add(load_builtin_model(name), "builtin");
  namespace fs = std::filesystem;
  for (const std::string& dir : model_path_dirs()) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) continue;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
      if (entry.path().extension() == ".model") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      try {
        add(parse_model_file(file.string()), file.string());
      } catch (const Error&) {
        // listing skips unreadable files; load_model reports the details
      }
    }
  }
  return out;
}

}  // namespace branecalc
