#pragma once

#include <string>
#include <vector>

#include "branecalc/model.hpp"
#include "branecalc/ring.hpp"

namespace branecalc {

// --- per-factor building blocks ---------------------------------------------

// Boundary excitation ladder for factor j at label L:
//   sum_{i=0..L} r^{w_j (2i - L)}   (L+1 terms, coefficient sum L+1)
RingElement excitation_element(const GepnerModel& model, int factor, int label);

// Ground-state fusion factor 1 - g_j^{-1} = 1 - r^{-2 w_j}.
RingElement ground_fusion_element(const GepnerModel& model, int factor);

// Alternating band sum n_{L,L~} in powers of g_j, half-integer powers
// realized as odd r-powers. Symmetric in (L, L~).
RingElement fusion_element(const GepnerModel& model, int factor, int label_a,
                           int label_b);

// Level-k SU(2) fusion rule: 1 iff |l1-l2| <= l3 <= min(l1+l2, 2k-l1-l2)
// with l1+l2+l3 even.
int su2_fusion(int level, int l1, int l2, int l3);

// --- intersection indices ----------------------------------------------------

// Product of the five ground fusion factors, unreduced.
RingElement ground_intersection(const GepnerModel& model);

// B-type intersection index via the shift-matrix method:
//   (-1)^{(S2-S1)/2} r^{M2-M1} prod_j n_{L1j,L2j}, unreduced.
RingElement intersection_index_element(const GepnerModel& model,
                                       const BoundaryState& s1,
                                       const BoundaryState& s2);

// Same observable evaluated as the constrained channel sum: per factor the
// level-k fusion rule selects the allowed channels, each contributing a
// +/- slot pair, organized as a generating element so the two routes compare
// slot by slot. Normalization fixed so the ground-state self-intersection
// matches the shift-matrix method (the constant is 1 in this realization).
RingElement intersection_index_direct(const GepnerModel& model,
                                      const BoundaryState& s1,
                                      const BoundaryState& s2);

// Self-intersection data of a state, unreduced, for audit output.
RingElement self_spectrum_element(const GepnerModel& model,
                                  const BoundaryState& state);

// --- charges -----------------------------------------------------------------

// Charge pipeline from an arbitrary superposition of M slots: multiply the
// five excitation ladders and (1 - r^2), project to the g-basis, reduce by
// the relation lattice. Exposed for the linearity property.
std::vector<BigInt> charge_from_slot_element(const GepnerModel& model,
                                             const std::array<int, 5>& labels,
                                             const RingElement& slot_element);

// Gepner-basis charge of a boundary state: unit slot at M through the same
// pipeline. Throws ParityError (selection rule) or MissingRelationsError.
std::vector<BigInt> boundary_state_charge(const GepnerModel& model,
                                          const BoundaryState& state);

// --- marginal-operator counting ----------------------------------------------

enum class MarginalInterpretation {
  // half the sum of absolute coefficients of the relation-reduced
  // self-spectrum element, minus vac (default)
  kReducedHalfAbs,
  // same but on the projected g-basis vector, no relation reduction
  kProjectedHalfAbs,
  // same on the raw order-2K element
  kElementHalfAbs,
};

MarginalInterpretation marginal_interpretation_from_string(
    const std::string& name);
std::string to_string(MarginalInterpretation interpretation);

struct MarginalCount {
  long long marginal = 0;
  long long vac = 0;
  bool half_exact = true;      // the absolute-coefficient sum was even
  std::string factors_note;    // which factors the labels addressed
};

// Self-spectrum element of a label subset. labels.size() selects the factor
// block: 2 -> factors {1,2}, 3 -> factors {3,4,5}, 5 -> all five.
RingElement subset_self_element(const GepnerModel& model,
                                const std::vector<int>& labels);

// vac = number of identity-channel occurrences across the self-fusion bands
// (the L = k fixed point contributes the identity twice).
long long subset_vacuum_count(const GepnerModel& model,
                              const std::vector<int>& labels);

MarginalCount marginal_count(const GepnerModel& model,
                             const std::vector<int>& labels,
                             MarginalInterpretation interpretation =
                                 MarginalInterpretation::kReducedHalfAbs);

}  // namespace branecalc
