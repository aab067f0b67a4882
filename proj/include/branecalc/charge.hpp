#pragma once

#include <array>
#include <vector>

#include "branecalc/gepner.hpp"
#include "branecalc/model.hpp"

namespace branecalc {

// Large-radius charge vector in the symplectic basis of
//   Z = n6 F0 + n41 F1 + n42 F2 + n0 + n21 t1 + n22 t2.
// Components are exact rationals; integrality is reported, never rounded.
struct ChargeVector {
  std::array<Rational, 6> n{};  // (n6, n41, n42, n0, n21, n22)

  const Rational& n6() const { return n[0]; }
  const Rational& n41() const { return n[1]; }
  const Rational& n42() const { return n[2]; }
  const Rational& n0() const { return n[3]; }
  const Rational& n21() const { return n[4]; }
  const Rational& n22() const { return n[5]; }

  bool is_integral() const;
  ChargeVector operator-() const;
  friend bool operator==(const ChargeVector& a, const ChargeVector& b) {
    return a.n == b.n;
  }
  friend bool operator<(const ChargeVector& a, const ChargeVector& b);
};

// q_L = q_G m^{-1}, the analytical continuation of Gepner-basis charges to
// the large-radius basis. Charges transform as row vectors so that
// q_G . Pi_G = (q_G m^{-1}) . (m Pi_G) holds identically.
ChargeVector to_large_radius(const GepnerModel& model,
                             const std::vector<BigInt>& gepner_charge);
ChargeVector to_large_radius(const GepnerModel& model,
                             const std::vector<Rational>& gepner_charge);

// row vector times the monodromy matrix (used by the inverse oracle)
std::vector<Rational> apply_monodromy_row(const GepnerModel& model,
                                          const std::vector<Rational>& v);

struct ChargeRow {
  int m = 0;                      // boundary-state M label
  std::vector<BigInt> gepner;     // reduced Gepner-basis charge
  ChargeVector large_radius;
};

// All rows for a fixed L label vector over the admissible M values
// (selection rule M + sum(L) even), sorted by M.
std::vector<ChargeRow> charge_table(const GepnerModel& model,
                                    const std::array<int, 5>& labels);

}  // namespace branecalc
