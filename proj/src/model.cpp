#include "branecalc/model.hpp"

#include <numeric>
#include <string>

#include "branecalc/errors.hpp"

namespace branecalc {

MonodromyMatrix MonodromyMatrix::from_matrix(RationalMatrix matrix) {
  MonodromyMatrix out;
  out.m_inverse = matrix.inverse();  // throws if singular
  out.m = std::move(matrix);
  return out;
}

std::array<MinimalModelFactor, 5> GepnerModel::make_factors(
    const std::array<int, 5>& levels, int* out_k) {
  int k = 1;
  for (int level : levels) {
    if (level < 0) throw ConstraintError("minimal-model level must be nonnegative");
    k = std::lcm(k, level + 2);
  }
  std::array<MinimalModelFactor, 5> factors;
  for (std::size_t j = 0; j < 5; ++j) {
    factors[j].level = levels[j];
    factors[j].weight = k / (levels[j] + 2);
  }
  if (out_k) *out_k = k;
  return factors;
}

void BoundaryState::validate(const GepnerModel& model) const {
  for (std::size_t j = 0; j < 5; ++j) {
    if (l[j] < 0 || l[j] > model.factors[j].level)
      throw LabelRangeError("Cardy label L" + std::to_string(j + 1) + "=" +
                            std::to_string(l[j]) + " outside 0.." +
                            std::to_string(model.factors[j].level));
  }
  if (m < 0 || m >= model.modulus())
    throw LabelRangeError("M label " + std::to_string(m) +
                          " outside Z_" + std::to_string(model.modulus()));
  if (s != 0 && s != 2)
    throw LabelRangeError("S label must be 0 or 2");
}

}  // namespace branecalc
