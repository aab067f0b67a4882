#pragma once

#include <map>
#include <string>
#include <vector>

namespace branecalc {

// Normal bundle O(a) + O(b) of a rational curve in the threefold; the CY
// condition forces a + b = -2.
struct NormalBundleSplit {
  int a = -1;
  int b = -1;
};

// (h0, h1) of O(n) on the rational curve
struct LineCohomology {
  int h0 = 0;
  int h1 = 0;
};
LineCohomology line_cohomology_p1(int n);

// Ext^1 / Ext^2 of the structure sheaf through the normal bundle sections;
// throws ConstraintError unless a + b = -2.
struct NormalExt {
  int ext1 = 0;
  int ext2 = 0;
};
NormalExt normal_bundle_ext(const NormalBundleSplit& split);

// World-volume superpotential shape attached to the split.
struct SuperpotentialForm {
  std::string form;
  int deformation_params = 0;  // equals ext1 for the classified cases
  bool classified = false;
};
SuperpotentialForm superpotential_form(const NormalBundleSplit& split);

// h[p][q] = dim H^p(S, E^v x F x wedge^q N); rows indexed by p, columns by q.
struct CohomologyTable {
  std::vector<std::vector<long long>> h;

  void validate() const;  // rectangular, nonnegative
  int dim_s() const { return static_cast<int>(h.size()) - 1; }
  int rank_n() const {
    return h.empty() ? -1 : static_cast<int>(h[0].size()) - 1;
  }

  static CohomologyTable k3_fiber();     // constant sheaf on the K3 fiber
  static CohomologyTable p1_base();      // constant sheaf on P1, N = O + O(-2)
};

// Ext^n = sum_{p+q=n} h[p][q]; length dim S + rank N + 1
std::vector<long long> ext_via_spectral(const CohomologyTable& table);
long long euler_characteristic(const CohomologyTable& table);

// Yoneda composition degree with an overflow flag past the ambient maximum.
struct YonedaDegree {
  int degree = 0;
  bool overflow = false;
};
YonedaDegree yoneda_degree(int p, int q, int max_degree = 3);

// Directed graph of D-brane charge types with forward (pushforward) and
// backward (pullback) arrows between neighbours.
struct Quiver {
  struct Arrow {
    std::string name;
    int tail = 0;
    int head = 0;
  };
  std::vector<int> vertices;
  std::vector<Arrow> arrows;

  // 0 <-> 2 <-> 4 <-> 6 with arrows a_*, b_*, c_* forward and
  // a^*, b^*, c^* backward
  static Quiver d_brane_chain();
  bool has_vertex(int v) const;
};

// A path is the arrow sequence in application order; empty = trivial path e_i.
struct QuiverPath {
  std::vector<std::string> arrows;
  int at_vertex = 0;  // meaningful for trivial paths
  std::string str() const;
};

// All composable arrow sequences from -> to of length <= max_len; when
// from == to the trivial path e_i is included.
std::vector<QuiverPath> quiver_paths(const Quiver& quiver, int from, int to,
                                     int max_len);

// Labels every arrow (and the trivial path of every assigned vertex) with the
// Ext dimensions of its head-vertex cohomology table.
std::map<std::string, std::vector<long long>> quiver_ext_annotation(
    const Quiver& quiver, const std::map<int, CohomologyTable>& assignments);

}  // namespace branecalc
