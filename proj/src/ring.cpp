#include "branecalc/ring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "branecalc/errors.hpp"
#include "branecalc/matrix.hpp"

namespace branecalc {

namespace {
int mod_slot(long long exponent, int order) {
  long long m = exponent % order;
  if (m < 0) m += order;
  return static_cast<int>(m);
}
}  // namespace

RingElement::RingElement(int order) : order_(order), coeffs_(order) {
  if (order <= 0 || order % 2 != 0)
    throw ConstraintError("ring order must be a positive even integer");
}

RingElement RingElement::unit(int order) { return monomial(order, 0); }

RingElement RingElement::monomial(int order, long long exponent,
                                  BigInt coefficient) {
  RingElement out(order);
  out.coeffs_[mod_slot(exponent, order)] = std::move(coefficient);
  return out;
}

void RingElement::add_term(long long exponent, const BigInt& coefficient) {
  coeffs_[mod_slot(exponent, order_)] += coefficient;
}

void RingElement::require_same_order(const RingElement& a,
                                     const RingElement& b) {
  if (a.order_ != b.order_)
    throw OrderMismatchError("ring elements have orders " +
                             std::to_string(a.order_) + " and " +
                             std::to_string(b.order_));
}

RingElement RingElement::operator+(const RingElement& rhs) const {
  require_same_order(*this, rhs);
  RingElement out = *this;
  for (int i = 0; i < order_; ++i) out.coeffs_[i] += rhs.coeffs_[i];
  return out;
}

RingElement RingElement::operator-(const RingElement& rhs) const {
  require_same_order(*this, rhs);
  RingElement out = *this;
  for (int i = 0; i < order_; ++i) out.coeffs_[i] -= rhs.coeffs_[i];
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out(order_);
  for (int i = 0; i < order_; ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

RingElement RingElement::operator*(const RingElement& rhs) const {
  require_same_order(*this, rhs);
  RingElement out(order_);
  for (int i = 0; i < order_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; j < order_; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      int k = i + j;
      if (k >= order_) k -= order_;
      out.coeffs_[k].add_mul(coeffs_[i], rhs.coeffs_[j]);
    }
  }
  return out;
}

RingElement RingElement::operator*(const BigInt& scalar) const {
  RingElement out(order_);
  if (scalar.is_zero()) return out;
  for (int i = 0; i < order_; ++i) out.coeffs_[i] = coeffs_[i] * scalar;
  return out;
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.order_ != b.order_) return false;
  for (int i = 0; i < a.order_; ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

bool RingElement::is_zero() const {
  for (const BigInt& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

RingElement RingElement::conjugate() const {
  RingElement out(order_);
  for (int i = 0; i < order_; ++i) {
    out.coeffs_[mod_slot(-i, order_)] = coeffs_[i];
  }
  return out;
}

BigInt RingElement::coefficient_sum() const {
  BigInt sum;
  for (const BigInt& c : coeffs_) sum += c;
  return sum;
}

BigInt RingElement::abs_coefficient_sum() const {
  BigInt sum;
  for (const BigInt& c : coeffs_) sum += c.abs();
  return sum;
}

std::vector<BigInt> RingElement::project_even() const {
  for (int i = 1; i < order_; i += 2) {
    if (!coeffs_[i].is_zero())
      throw ParityError("odd shift slot " + std::to_string(i) +
                        " is nonzero; boundary-state labels violate the "
                        "parity selection rule");
  }
  std::vector<BigInt> out(order_ / 2);
  for (int i = 0; i < order_ / 2; ++i) out[i] = coeffs_[2 * i];
  return out;
}

std::map<int, BigInt> RingElement::terms() const {
  std::map<int, BigInt> out;
  for (int i = 0; i < order_; ++i) {
    if (!coeffs_[i].is_zero()) out[i] = coeffs_[i];
  }
  return out;
}

std::string RingElement::str() const {
  std::string out;
  for (int i = 0; i < order_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    const bool negative = coeffs_[i].is_negative();
    BigInt mag = coeffs_[i].abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += "r^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

RelationLattice::RelationLattice(int dim, std::vector<Generator> generators)
    : dim_(dim), generators_(std::move(generators)) {
  validate();
  for (const Generator& g : generators_) sorted_pivots_.push_back(g.pivot);
  std::sort(sorted_pivots_.begin(), sorted_pivots_.end());
}

void RelationLattice::validate() const {
  if (dim_ <= 0) throw ConstraintError("relation lattice dimension must be positive");
  std::set<int> pivots;
  for (const Generator& g : generators_) {
    if (static_cast<int>(g.coefficients.size()) != dim_)
      throw ConstraintError("relation generator length does not match dimension");
    if (g.pivot < 0 || g.pivot >= dim_)
      throw ConstraintError("relation pivot out of range");
    if (g.coefficients[g.pivot] != 1 && g.coefficients[g.pivot] != -1)
      throw ConstraintError("relation generator must have entry +-1 at its pivot");
    if (!pivots.insert(g.pivot).second)
      throw ConstraintError("relation generators share a pivot coordinate");
  }
  // Pivot columns must be clean across the other generators; this is what
  // makes the single elimination pass canonical.
  for (const Generator& g : generators_) {
    for (const Generator& other : generators_) {
      if (&g == &other) continue;
      if (other.coefficients[g.pivot] != 0)
        throw ConstraintError(
            "relation generators are not pivot-canonical: generator "
            "touches another generator's pivot coordinate");
    }
  }
  // Independence: rank over Q must equal the generator count.
  std::vector<std::vector<Rational>> rows;
  for (const Generator& g : generators_) {
    std::vector<Rational> row;
    row.reserve(g.coefficients.size());
    for (long long c : g.coefficients) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  if (!rows.empty() && RationalMatrix::rank(rows) != generators_.size())
    throw ConstraintError("relation generators are linearly dependent");
}

std::vector<BigInt> RelationLattice::reduce_full(
    const std::vector<BigInt>& v, std::vector<BigInt>* multipliers) const {
  if (static_cast<int>(v.size()) != dim_)
    throw ConstraintError("vector length does not match relation lattice dimension");
  std::vector<BigInt> out = v;
  if (multipliers) multipliers->clear();
  for (const Generator& g : generators_) {
    // multiplier = v[pivot] / gen[pivot], with gen[pivot] = +-1
    BigInt mult = g.coefficients[g.pivot] == 1 ? out[g.pivot] : -out[g.pivot];
    if (multipliers) multipliers->push_back(mult);
    if (mult.is_zero()) continue;
    for (int i = 0; i < dim_; ++i) {
      if (g.coefficients[i] != 0) out[i] -= mult * BigInt(g.coefficients[i]);
    }
  }
  return out;
}

std::vector<BigInt> RelationLattice::reduce(const std::vector<BigInt>& v) const {
  std::vector<BigInt> full = reduce_full(v, nullptr);
  std::vector<BigInt> out;
  out.reserve(reduced_dim());
  std::size_t next_pivot = 0;
  for (int i = 0; i < dim_; ++i) {
    if (next_pivot < sorted_pivots_.size() && sorted_pivots_[next_pivot] == i) {
      ++next_pivot;
      continue;
    }
    out.push_back(full[i]);
  }
  return out;
}

}  // namespace branecalc
