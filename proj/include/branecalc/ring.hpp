#pragma once

#include <map>
#include <vector>

#include "branecalc/bigint.hpp"

namespace branecalc {

// Element of the cyclic shift algebra of order 2K: an integer coefficient
// vector over powers of the half-shift r, with r^order == 1. The full shift
// is g = r^2, so integer g-powers occupy even slots and half-integer g-powers
// odd slots. Immutable order; mixing orders is an error.
class RingElement {
 public:
  explicit RingElement(int order);
  static RingElement unit(int order);  // r^0
  static RingElement monomial(int order, long long exponent,
                              BigInt coefficient = BigInt(1));

  int order() const { return order_; }
  const BigInt& coeff(int slot) const { return coeffs_[slot]; }
  // exponent is reduced mod order (negative exponents wrap)
  void add_term(long long exponent, const BigInt& coefficient);

  RingElement operator+(const RingElement& rhs) const;
  RingElement operator-(const RingElement& rhs) const;
  RingElement operator-() const;
  // cyclic convolution mod r^order = 1
  RingElement operator*(const RingElement& rhs) const;
  RingElement operator*(const BigInt& scalar) const;
  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) {
    return !(a == b);
  }

  bool is_zero() const;
  // slot e -> slot -e; realizes g -> g^{-1}
  RingElement conjugate() const;
  // evaluate at r = 1 (sum of all coefficients)
  BigInt coefficient_sum() const;
  BigInt abs_coefficient_sum() const;

  // The K even-slot coefficients, i.e. the element rewritten in the g-basis.
  // Throws ParityError if any odd slot is nonzero.
  std::vector<BigInt> project_even() const;

  // nonzero terms, slot -> coefficient
  std::map<int, BigInt> terms() const;
  std::string str() const;  // diagnostic form like "r^0 - r^14"

 private:
  int order_;
  std::vector<BigInt> coeffs_;
  static void require_same_order(const RingElement& a, const RingElement& b);
};

// Sublattice of the K-dimensional period space spanned by the stated
// relation generators. Each generator carries a pivot coordinate where its
// entry is +-1 and where no other generator is supported, so a single
// elimination pass produces the canonical quotient representative.
class RelationLattice {
 public:
  struct Generator {
    std::vector<long long> coefficients;  // length dim
    int pivot = 0;
  };

  RelationLattice(int dim, std::vector<Generator> generators);

  int dim() const { return dim_; }
  const std::vector<Generator>& generators() const { return generators_; }
  int reduced_dim() const {
    return dim_ - static_cast<int>(generators_.size());
  }

  // Canonical representative: subtract v[pivot]/gen[pivot] times each
  // generator, then drop the pivot coordinates.
  std::vector<BigInt> reduce(const std::vector<BigInt>& v) const;
  // Same elimination but keeps the full-length vector (pivots zeroed) and
  // reports the multiplier used per generator.
  std::vector<BigInt> reduce_full(const std::vector<BigInt>& v,
                                  std::vector<BigInt>* multipliers) const;

 private:
  int dim_;
  std::vector<Generator> generators_;
  std::vector<int> sorted_pivots_;
  void validate() const;
};

}  // namespace branecalc
