#include "branecalc/ext.hpp"

#include <algorithm>

#include "branecalc/errors.hpp"

namespace branecalc {

LineCohomology line_cohomology_p1(int n) {
  LineCohomology out;
  out.h0 = std::max(n + 1, 0);
  out.h1 = std::max(-n - 1, 0);
  return out;
}

NormalExt normal_bundle_ext(const NormalBundleSplit& split) {
  if (split.a + split.b != -2)
    throw ConstraintError("normal bundle split (" + std::to_string(split.a) +
                          "," + std::to_string(split.b) +
                          ") violates the Calabi-Yau condition a + b = -2");
  const LineCohomology ca = line_cohomology_p1(split.a);
  const LineCohomology cb = line_cohomology_p1(split.b);
  return {ca.h0 + cb.h0, ca.h1 + cb.h1};
}

SuperpotentialForm superpotential_form(const NormalBundleSplit& split) {
  if (split.a + split.b != -2)
    throw ConstraintError("superpotential classification needs a + b = -2");
  const int lo = std::min(split.a, split.b);
  const int hi = std::max(split.a, split.b);
  SuperpotentialForm out;
  out.deformation_params = normal_bundle_ext(split).ext1;
  if (hi == -1 && lo == -1) {
    out.form = "phi*psi^2";
    out.classified = true;
  } else if (hi == 0 && lo == -2) {
    // obstruction order n is a free parameter of the family
    out.form = "psi^(n+1)";
    out.classified = true;
  } else if (hi == 1 && lo == -3) {
    out.form = "rho^3*psi^3 + phi*F(rho,psi) + ...";
    out.classified = true;
  } else {
    out.form = "unclassified";
  }
  return out;
}

void CohomologyTable::validate() const {
  if (h.empty() || h[0].empty())
    throw ConstraintError("cohomology table must be nonempty");
  for (const auto& row : h) {
    if (row.size() != h[0].size())
      throw ConstraintError("cohomology table rows have unequal length");
    for (long long v : row) {
      if (v < 0) throw ConstraintError("cohomology dimensions are nonnegative");
    }
  }
}

CohomologyTable CohomologyTable::k3_fiber() {
  // h^0 = h^2 = 1, h^1 = 0 on the K3; trivial rank-1 normal bundle
  return {{{1, 1}, {0, 0}, {1, 1}}};
}

CohomologyTable CohomologyTable::p1_base() {
  // columns q = 0,1,2 for wedge^q(O + O(-2))
  return {{{1, 1, 0}, {0, 1, 1}}};
}

std::vector<long long> ext_via_spectral(const CohomologyTable& table) {
  table.validate();
  const int rows = static_cast<int>(table.h.size());
  const int cols = static_cast<int>(table.h[0].size());
  std::vector<long long> ext(rows + cols - 1, 0);
  for (int p = 0; p < rows; ++p) {
    for (int q = 0; q < cols; ++q) ext[p + q] += table.h[p][q];
  }
  return ext;
}

long long euler_characteristic(const CohomologyTable& table) {
  std::vector<long long> ext = ext_via_spectral(table);
  long long chi = 0;
  for (std::size_t n = 0; n < ext.size(); ++n)
    chi += (n % 2 == 0) ? ext[n] : -ext[n];
  return chi;
}

YonedaDegree yoneda_degree(int p, int q, int max_degree) {
  if (p < 0 || q < 0) throw ConstraintError("Yoneda degrees are nonnegative");
  YonedaDegree out;
  out.degree = p + q;
  out.overflow = out.degree > max_degree;
  return out;
}

Quiver Quiver::d_brane_chain() {
  Quiver q;
  q.vertices = {0, 2, 4, 6};
  q.arrows = {
      {"a_*", 0, 2}, {"b_*", 2, 4}, {"c_*", 4, 6},
      {"a^*", 2, 0}, {"b^*", 4, 2}, {"c^*", 6, 4},
  };
  return q;
}

bool Quiver::has_vertex(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::string QuiverPath::str() const {
  if (arrows.empty()) return "e_" + std::to_string(at_vertex);
  std::string out;
  for (const std::string& a : arrows) {
    if (!out.empty()) out += "\xc2\xb7";  // middle dot
    out += a;
  }
  return out;
}

std::vector<QuiverPath> quiver_paths(const Quiver& quiver, int from, int to,
                                     int max_len) {
  if (!quiver.has_vertex(from))
    throw LabelRangeError("unknown quiver vertex " + std::to_string(from));
  if (!quiver.has_vertex(to))
    throw LabelRangeError("unknown quiver vertex " + std::to_string(to));
  if (max_len < 0) throw LabelRangeError("max path length must be nonnegative");

  std::vector<QuiverPath> out;
  if (from == to) out.push_back({{}, from});

  // breadth-first over arrow sequences; the quiver is tiny
  struct Partial {
    int at;
    std::vector<std::string> arrows;
  };
  std::vector<Partial> frontier = {{from, {}}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Partial> next;
    for (const Partial& partial : frontier) {
      for (const Quiver::Arrow& arrow : quiver.arrows) {
        if (arrow.tail != partial.at) continue;
        Partial extended{arrow.head, partial.arrows};
        extended.arrows.push_back(arrow.name);
        if (arrow.head == to) out.push_back({extended.arrows, to});
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::map<std::string, std::vector<long long>> quiver_ext_annotation(
    const Quiver& quiver, const std::map<int, CohomologyTable>& assignments) {
  std::map<std::string, std::vector<long long>> out;
  for (const Quiver::Arrow& arrow : quiver.arrows) {
    auto it = assignments.find(arrow.head);
    if (it == assignments.end())
      throw ConstraintError("no cohomology table assigned to vertex " +
                            std::to_string(arrow.head));
    out[arrow.name] = ext_via_spectral(it->second);
  }
  // trivial paths carry the self-Ext of their vertex
  for (const auto& [vertex, table] : assignments) {
    if (!quiver.has_vertex(vertex))
      throw LabelRangeError("assignment for unknown vertex " +
                            std::to_string(vertex));
    out["e_" + std::to_string(vertex)] = ext_via_spectral(table);
  }
  return out;
}

}  // namespace branecalc
