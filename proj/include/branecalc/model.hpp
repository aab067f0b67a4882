#pragma once

#include <array>
#include <optional>
#include <string>

#include "branecalc/matrix.hpp"
#include "branecalc/ring.hpp"

namespace branecalc {

// One N=2 minimal-model tensor factor: level k, height h = k+2, and the
// weight K/h once the model's K is known.
struct MinimalModelFactor {
  int level = 0;
  int weight = 0;
  int height() const { return level + 2; }
};

// Triple-intersection and linear coefficients of the two-parameter
// intersection ring, plus the divisor pairing restricted to the K3 fiber.
struct IntersectionRing {
  // trilinear form on the {H, L} divisor basis: H^3, H^2 L (H L^2 = L^3 = 0)
  Rational c111;
  Rational c112;
  // linear prepotential coefficients
  Rational b1;
  Rational b2;
  // divisor pairing restricted to the fiber: H|_S.H|_S, H|_S.L|_S, L|_S.L|_S
  Rational fiber_hh;
  Rational fiber_hl;
  Rational fiber_ll;
};

// Basis change between Gepner-point periods and large-radius symplectic
// periods; the inverse is computed once at load time, exactly.
struct MonodromyMatrix {
  RationalMatrix m;
  RationalMatrix m_inverse;

  static MonodromyMatrix from_matrix(RationalMatrix matrix);
};

// Registry entry for one Calabi-Yau model: the five minimal-model factors,
// the order K, optional period relations, monodromy, and intersection data.
struct GepnerModel {
  std::string name;
  std::array<MinimalModelFactor, 5> factors;
  int big_k = 0;  // K = lcm of heights
  std::optional<RelationLattice> relations;
  MonodromyMatrix monodromy;
  IntersectionRing ring;

  int modulus() const { return 2 * big_k; }  // M lives in Z_{2K}

  // Builds factor weights and K from the raw levels; validates h | K.
  static std::array<MinimalModelFactor, 5> make_factors(
      const std::array<int, 5>& levels, int* out_k);
};

// Cardy labels of a B-type boundary state. S is restricted to {0, 2}; only
// the sign (-1)^{(S - S~)/2} ever depends on it.
struct BoundaryState {
  std::array<int, 5> l = {0, 0, 0, 0, 0};
  int m = 0;
  int s = 0;

  int l_sum() const { return l[0] + l[1] + l[2] + l[3] + l[4]; }
  // selection rule: M + sum(L_j) even
  bool parity_ok() const { return (m + l_sum()) % 2 == 0; }
  void validate(const GepnerModel& model) const;
};

}  // namespace branecalc
