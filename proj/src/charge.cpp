#include "branecalc/charge.hpp"

#include "branecalc/errors.hpp"

namespace branecalc {

bool ChargeVector::is_integral() const {
  for (const Rational& c : n) {
    if (!c.is_integer()) return false;
  }
  return true;
}

ChargeVector ChargeVector::operator-() const {
  ChargeVector out;
  for (std::size_t i = 0; i < 6; ++i) out.n[i] = -n[i];
  return out;
}

bool operator<(const ChargeVector& a, const ChargeVector& b) {
  for (std::size_t i = 0; i < 6; ++i) {
    int cmp = Rational::compare(a.n[i], b.n[i]);
    if (cmp != 0) return cmp < 0;
  }
  return false;
}

ChargeVector to_large_radius(const GepnerModel& model,
                             const std::vector<Rational>& gepner_charge) {
  if (gepner_charge.size() != 6)
    throw ConstraintError("Gepner charge must have 6 components");
  std::vector<Rational> lr =
      model.monodromy.m_inverse.apply_row(gepner_charge);
  ChargeVector out;
  for (std::size_t i = 0; i < 6; ++i) out.n[i] = lr[i];
  return out;
}

ChargeVector to_large_radius(const GepnerModel& model,
                             const std::vector<BigInt>& gepner_charge) {
  std::vector<Rational> q;
  q.reserve(gepner_charge.size());
  for (const BigInt& c : gepner_charge) q.emplace_back(c);
  return to_large_radius(model, q);
}

std::vector<Rational> apply_monodromy_row(const GepnerModel& model,
                                          const std::vector<Rational>& v) {
  return model.monodromy.m.apply_row(v);
}

std::vector<ChargeRow> charge_table(const GepnerModel& model,
                                    const std::array<int, 5>& labels) {
  const int l_sum = labels[0] + labels[1] + labels[2] + labels[3] + labels[4];
  std::vector<ChargeRow> rows;
  for (int m = 0; m < model.modulus(); ++m) {
    if ((m + l_sum) % 2 != 0) continue;
    BoundaryState state;
    state.l = labels;
    state.m = m;
    ChargeRow row;
    row.m = m;
    row.gepner = boundary_state_charge(model, state);
    row.large_radius = to_large_radius(model, row.gepner);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace branecalc
