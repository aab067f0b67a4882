#pragma once

#include <map>
#include <string>
#include <utility>

#include "branecalc/rational.hpp"

namespace branecalc {

// Polynomial in two variables (t1, t2) with exact rational coefficients.
// Small degrees only; used to build period vectors symbolically so they can
// be compared coefficient by coefficient.
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 constant(Rational c);
  static Poly2 t1();
  static Poly2 t2();
  // c * t1^i * t2^j
  static Poly2 monomial(Rational c, int deg1, int deg2);

  Poly2 operator+(const Poly2& rhs) const;
  Poly2 operator-(const Poly2& rhs) const;
  Poly2 operator*(const Poly2& rhs) const;
  Poly2 operator*(const Rational& scalar) const;
  Poly2 operator-() const;
  friend bool operator==(const Poly2& a, const Poly2& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  Poly2 derivative_t1() const;
  Poly2 derivative_t2() const;
  Rational eval(const Rational& t1, const Rational& t2) const;

  const std::map<std::pair<int, int>, Rational>& terms() const {
    return terms_;
  }
  Rational coefficient(int deg1, int deg2) const;
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

 private:
  // (deg t1, deg t2) -> coefficient; zero coefficients never stored
  std::map<std::pair<int, int>, Rational> terms_;
  void add_term(int deg1, int deg2, const Rational& c);
};

}  // namespace branecalc
