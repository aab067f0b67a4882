#include "branecalc/gepner.hpp"

#include <string>
#include <utility>

#include "branecalc/errors.hpp"

namespace branecalc {

namespace {

void check_factor(const GepnerModel& model, int factor) {
  if (factor < 0 || factor >= 5)
    throw LabelRangeError("factor index " + std::to_string(factor) +
                          " outside 0..4");
  (void)model;
}

void check_label(const GepnerModel& model, int factor, int label) {
  check_factor(model, factor);
  if (label < 0 || label > model.factors[factor].level)
    throw LabelRangeError("label " + std::to_string(label) + " outside 0.." +
                          std::to_string(model.factors[factor].level) +
                          " for factor " + std::to_string(factor + 1));
}

}  // namespace

RingElement excitation_element(const GepnerModel& model, int factor,
                               int label) {
  check_label(model, factor, label);
  const int w = model.factors[factor].weight;
  RingElement out(model.modulus());
  for (int i = 0; i <= label; ++i) {
    out.add_term(static_cast<long long>(w) * (2 * i - label), BigInt(1));
  }
  return out;
}

RingElement ground_fusion_element(const GepnerModel& model, int factor) {
  check_factor(model, factor);
  const int w = model.factors[factor].weight;
  RingElement out(model.modulus());
  out.add_term(0, BigInt(1));
  out.add_term(-2ll * w, BigInt(-1));
  return out;
}

RingElement fusion_element(const GepnerModel& model, int factor, int label_a,
                           int label_b) {
  check_label(model, factor, label_a);
  check_label(model, factor, label_b);
  const int w = model.factors[factor].weight;
  const int lo = label_a < label_b ? label_b - label_a : label_a - label_b;
  const int hi = label_a + label_b;
  RingElement out(model.modulus());
  // band of g_j-exponents lo/2 .. hi/2 minus the mirror band, written in
  // r-exponents (g_j = r^{2w})
  for (int s = lo; s <= hi; s += 2) {
    out.add_term(static_cast<long long>(w) * s, BigInt(1));
    out.add_term(-static_cast<long long>(w) * (s + 2), BigInt(-1));
  }
  return out;
}

int su2_fusion(int level, int l1, int l2, int l3) {
  if (level < 0) throw LabelRangeError("negative SU(2) level");
  for (int l : {l1, l2, l3}) {
    if (l < 0 || l > level)
      throw LabelRangeError("SU(2) label " + std::to_string(l) +
                            " outside 0.." + std::to_string(level));
  }
  if ((l1 + l2 + l3) % 2 != 0) return 0;
  const int lo = l1 < l2 ? l2 - l1 : l1 - l2;
  const int hi = std::min(l1 + l2, 2 * level - l1 - l2);
  return (lo <= l3 && l3 <= hi) ? 1 : 0;
}

RingElement ground_intersection(const GepnerModel& model) {
  RingElement out = RingElement::unit(model.modulus());
  for (int j = 0; j < 5; ++j) out = out * ground_fusion_element(model, j);
  return out;
}

RingElement intersection_index_element(const GepnerModel& model,
                                       const BoundaryState& s1,
                                       const BoundaryState& s2) {
  s1.validate(model);
  s2.validate(model);
  const int sign = ((s2.s - s1.s) / 2) % 2 == 0 ? 1 : -1;
  RingElement out =
      RingElement::monomial(model.modulus(), s2.m - s1.m, BigInt(sign));
  for (int j = 0; j < 5; ++j) {
    out = out * fusion_element(model, j, s1.l[j], s2.l[j]);
  }
  return out;
}

RingElement intersection_index_direct(const GepnerModel& model,
                                      const BoundaryState& s1,
                                      const BoundaryState& s2) {
  s1.validate(model);
  s2.validate(model);
  const int n = model.modulus();
  const int sign = ((s2.s - s1.s) / 2) % 2 == 0 ? 1 : -1;
  // hand-rolled slot accumulation, deliberately not sharing the ring
  // multiplication path used by intersection_index_element
  std::vector<BigInt> acc(n);
  {
    long long start = (s2.m - s1.m) % n;
    if (start < 0) start += n;
    acc[start] = BigInt(sign);
  }
  for (int j = 0; j < 5; ++j) {
    const int level = model.factors[j].level;
    const int w = model.factors[j].weight;
    std::vector<BigInt> next(n);
    for (int l3 = 0; l3 <= level; ++l3) {
      if (su2_fusion(level, s1.l[j], s2.l[j], l3) == 0) continue;
      // allowed channel: +g_j^{l3/2} - g_j^{-1-l3/2}
      const int up = (static_cast<long long>(w) * l3) % n;
      long long dn_raw = (-static_cast<long long>(w) * (l3 + 2)) % n;
      const int dn = static_cast<int>(dn_raw < 0 ? dn_raw + n : dn_raw);
      for (int slot = 0; slot < n; ++slot) {
        if (acc[slot].is_zero()) continue;
        int a = slot + up;
        if (a >= n) a -= n;
        int b = slot + dn;
        if (b >= n) b -= n;
        next[a] += acc[slot];
        next[b] -= acc[slot];
      }
    }
    acc = std::move(next);
  }
  // normalization constant: ground-state calibration fixes it to one
  RingElement out(n);
  for (int slot = 0; slot < n; ++slot) {
    if (!acc[slot].is_zero()) out.add_term(slot, acc[slot]);
  }
  return out;
}

RingElement self_spectrum_element(const GepnerModel& model,
                                  const BoundaryState& state) {
  return intersection_index_element(model, state, state);
}

std::vector<BigInt> charge_from_slot_element(const GepnerModel& model,
                                             const std::array<int, 5>& labels,
                                             const RingElement& slot_element) {
  if (!model.relations.has_value())
    throw MissingRelationsError("model '" + model.name +
                                "' has no relation lattice; cannot reduce "
                                "charges to the independent-period basis");
  RingElement q = slot_element;
  for (int j = 0; j < 5; ++j) q = q * excitation_element(model, j, labels[j]);
  RingElement one_minus_g(model.modulus());
  one_minus_g.add_term(0, BigInt(1));
  one_minus_g.add_term(2, BigInt(-1));
  q = q * one_minus_g;
  return model.relations->reduce(q.project_even());
}

std::vector<BigInt> boundary_state_charge(const GepnerModel& model,
                                          const BoundaryState& state) {
  state.validate(model);
  if (!state.parity_ok())
    throw ParityError("state with M=" + std::to_string(state.m) +
                      " and sum(L)=" + std::to_string(state.l_sum()) +
                      " violates the selection rule M + sum(L) even");
  return charge_from_slot_element(
      model, state.l, RingElement::monomial(model.modulus(), state.m));
}

MarginalInterpretation marginal_interpretation_from_string(
    const std::string& name) {
  if (name == "reduced-half-abs") return MarginalInterpretation::kReducedHalfAbs;
  if (name == "projected-half-abs")
    return MarginalInterpretation::kProjectedHalfAbs;
  if (name == "element-half-abs") return MarginalInterpretation::kElementHalfAbs;
  throw LabelRangeError(
      "unknown marginal interpretation '" + name +
      "' (expected reduced-half-abs, projected-half-abs or element-half-abs)");
}

std::string to_string(MarginalInterpretation interpretation) {
  switch (interpretation) {
    case MarginalInterpretation::kReducedHalfAbs:
      return "reduced-half-abs";
    case MarginalInterpretation::kProjectedHalfAbs:
      return "projected-half-abs";
    case MarginalInterpretation::kElementHalfAbs:
      return "element-half-abs";
  }
  return "?";
}

namespace {

// label-count -> factor block convention, documented in output
std::vector<int> subset_factors(const GepnerModel& model,
                                const std::vector<int>& labels,
                                std::string* note) {
  std::vector<int> factors;
  switch (labels.size()) {
    case 2:
      factors = {0, 1};
      break;
    case 3:
      factors = {2, 3, 4};
      break;
    case 5:
      factors = {0, 1, 2, 3, 4};
      break;
    default:
      throw LabelRangeError(
          "marginal counting takes 2, 3 or 5 labels (got " +
          std::to_string(labels.size()) + ")");
  }
  if (note) {
    *note = "factors";
    for (int j : factors) {
      *note += (j == factors.front() ? " " : ",") + std::to_string(j + 1);
    }
    *note += " of " + model.name + " (levels";
    for (int j : factors) *note += " " + std::to_string(model.factors[j].level);
    *note += ")";
  }
  return factors;
}

}  // namespace

RingElement subset_self_element(const GepnerModel& model,
                                const std::vector<int>& labels) {
  std::vector<int> factors = subset_factors(model, labels, nullptr);
  RingElement out = RingElement::unit(model.modulus());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out = out * fusion_element(model, factors[i], labels[i], labels[i]);
  }
  return out;
}

long long subset_vacuum_count(const GepnerModel& model,
                              const std::vector<int>& labels) {
  std::vector<int> factors = subset_factors(model, labels, nullptr);
  long long vac = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int level = model.factors[factors[i]].level;
    if (labels[i] < 0 || labels[i] > level)
      throw LabelRangeError("label " + std::to_string(labels[i]) +
                            " outside 0.." + std::to_string(level) +
                            " for factor " + std::to_string(factors[i] + 1));
    // the self-fusion band contains the identity once, twice at the L = k
    // fixed point (channel 2k is the identity's image)
    vac *= (labels[i] == level && level > 0) ? 2 : 1;
  }
  return vac;
}

MarginalCount marginal_count(const GepnerModel& model,
                             const std::vector<int>& labels,
                             MarginalInterpretation interpretation) {
  MarginalCount out;
  std::vector<int> factors = subset_factors(model, labels, &out.factors_note);
  (void)factors;
  out.vac = subset_vacuum_count(model, labels);
  const RingElement element = subset_self_element(model, labels);

  BigInt abs_sum;
  switch (interpretation) {
    case MarginalInterpretation::kReducedHalfAbs: {
      if (!model.relations.has_value())
        throw MissingRelationsError(
            "model '" + model.name +
            "' has no relation lattice; interpretation reduced-half-abs "
            "is not available");
      std::vector<BigInt> reduced =
          model.relations->reduce(element.project_even());
      for (const BigInt& c : reduced) abs_sum += c.abs();
      break;
    }
    case MarginalInterpretation::kProjectedHalfAbs: {
      for (const BigInt& c : element.project_even()) abs_sum += c.abs();
      break;
    }
    case MarginalInterpretation::kElementHalfAbs:
      abs_sum = element.abs_coefficient_sum();
      break;
  }
  long long total = abs_sum.to_int64();
  out.half_exact = total % 2 == 0;
  out.marginal = total / 2 - out.vac;
  return out;
}

}  // namespace branecalc
