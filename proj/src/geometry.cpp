#include "branecalc/geometry.hpp"

#include "branecalc/errors.hpp"

namespace branecalc {

namespace {

std::string linear_combo(const Rational& x, const char* xs, const Rational& y,
                         const char* ys) {
  if (x.is_zero() && y.is_zero()) return "0";
  std::string out;
  auto append = [&out](const Rational& c, const char* sym) {
    if (c.is_zero()) return;
    const bool negative = c.is_negative();
    Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag == Rational(1)) {
      out += sym;
    } else {
      out += mag.str() + "*" + sym;
    }
  };
  append(x, xs);
  append(y, ys);
  return out;
}

}  // namespace

std::string DivisorClass::str() const { return linear_combo(a, "H", b, "L"); }
std::string CurveClass::str() const { return linear_combo(c, "h", d, "l"); }

std::array<Rational, 2> divisor_in_le_basis(const DivisorClass& divisor) {
  // aH + bL = a(2L + E) + bL = (2a + b) L + a E
  return {Rational(2) * divisor.a + divisor.b, divisor.a};
}

Rational triple_intersection(const IntersectionRing& ring,
                             const DivisorClass& d1, const DivisorClass& d2,
                             const DivisorClass& d3) {
  // only H^3 and H^2 L survive
  Rational hhh = d1.a * d2.a * d3.a;
  Rational hhl = d1.a * d2.a * d3.b + d1.a * d2.b * d3.a + d1.b * d2.a * d3.a;
  return ring.c111 * hhh + ring.c112 * hhl;
}

Rational divisor_curve_pairing(const DivisorClass& divisor,
                               const CurveClass& curve) {
  // H.h = 2, L.l = 2, cross pairings vanish
  return Rational(2) * (divisor.a * curve.c + divisor.b * curve.d);
}

Poly2 prepotential_poly(const IntersectionRing& ring,
                        const Rational& constant_term) {
  const Rational one_sixth(BigInt(1), BigInt(6));
  const Rational one_half(BigInt(1), BigInt(2));
  const Rational one_24th(BigInt(1), BigInt(24));
  Poly2 f = Poly2::monomial(-(one_sixth * ring.c111), 3, 0);
  f = f + Poly2::monomial(-(one_half * ring.c112), 2, 1);
  f = f + Poly2::monomial(one_24th * ring.b1, 1, 0);
  f = f + Poly2::monomial(one_24th * ring.b2, 0, 1);
  f = f + Poly2::constant(constant_term);
  return f;
}

Rational prepotential(const IntersectionRing& ring, const Rational& t1,
                      const Rational& t2, const Rational& constant_term) {
  return prepotential_poly(ring, constant_term).eval(t1, t2);
}

std::array<Poly2, 6> period_vector_poly(const IntersectionRing& ring,
                                        const Rational& constant_term) {
  const Poly2 f = prepotential_poly(ring, constant_term);
  const Poly2 f1 = f.derivative_t1();
  const Poly2 f2 = f.derivative_t2();
  const Poly2 t1 = Poly2::t1();
  const Poly2 t2 = Poly2::t2();
  std::array<Poly2, 6> pi;
  pi[0] = f * Rational(2) - t1 * f1 - t2 * f2;
  pi[1] = f1;
  pi[2] = f2;
  pi[3] = Poly2::constant(Rational(1));
  pi[4] = t1;
  pi[5] = t2;
  return pi;
}

std::array<Rational, 6> period_vector(const IntersectionRing& ring,
                                      const Rational& t1, const Rational& t2) {
  std::array<Poly2, 6> pi = period_vector_poly(ring);
  std::array<Rational, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = pi[i].eval(t1, t2);
  return out;
}

Rational central_charge(const IntersectionRing& ring, const ChargeVector& n,
                        const Rational& t1, const Rational& t2) {
  std::array<Rational, 6> pi = period_vector(ring, t1, t2);
  Rational z;
  for (std::size_t i = 0; i < 6; ++i) z += n.n[i] * pi[i];
  return z;
}

ChernData charge_to_chern(const ChargeVector& n) {
  const Rational one_half(BigInt(1), BigInt(2));
  const Rational one_third(BigInt(1), BigInt(3));
  ChernData out;
  out.rank = n.n6();
  out.c1 = {one_half * n.n41(), n.n42() - n.n41()};
  out.ch2 = {n.n21(), n.n22()};
  out.ch3 = -n.n0() - one_third * n.n41() - Rational(2) * n.n42();
  out.c1_le = divisor_in_le_basis(out.c1);
  return out;
}

ChargeVector chern_to_charge(const Rational& rank, const DivisorClass& c1,
                             const CurveClass& ch2, const Rational& ch3) {
  const Rational one_third(BigInt(1), BigInt(3));
  ChargeVector n;
  n.n[0] = rank;
  n.n[1] = Rational(2) * c1.a;
  n.n[2] = c1.b + Rational(2) * c1.a;
  n.n[4] = ch2.c;
  n.n[5] = ch2.d;
  n.n[3] = -ch3 - one_third * n.n[1] - Rational(2) * n.n[2];
  return n;
}

MukaiVector d4_charge(const ChargeVector& n) {
  if (!n.n6().is_zero())
    throw ConstraintError("D4 charge vector requires n6 = 0");
  MukaiVector q;
  q.rank = Rational(0);
  q.c1 = {Rational(0), n.n42()};
  q.ch2 = {n.n21(), Rational(0)};
  q.ch3 = -n.n0() - Rational(2) * n.n42();
  return q;
}

MukaiVector d2_charge(const ChargeVector& n) {
  if (!n.n6().is_zero() || !n.n41().is_zero() || !n.n42().is_zero())
    throw ConstraintError("pure D2 charge vector requires n6 = n41 = n42 = 0");
  if (n.n22().is_zero())
    throw ConstraintError("pure D2 charge vector requires n22 != 0");
  MukaiVector q;
  q.rank = Rational(0);
  q.c1 = {Rational(0), Rational(0)};
  q.ch2 = {Rational(0), n.n22()};
  q.ch3 = -n.n0();
  return q;
}

Rational fiber_pairing(const IntersectionRing& ring, const DivisorClass& d1,
                       const DivisorClass& d2) {
  return ring.fiber_hh * d1.a * d2.a +
         ring.fiber_hl * (d1.a * d2.b + d1.b * d2.a) +
         ring.fiber_ll * d1.b * d2.b;
}

FiberMukaiVector mukai_vector(const IntersectionRing& ring,
                              const Rational& rank, const DivisorClass& c1,
                              const Rational& c2) {
  const Rational one_half(BigInt(1), BigInt(2));
  FiberMukaiVector v;
  v.rank = rank;
  v.c1 = c1;
  v.s = one_half * fiber_pairing(ring, c1, c1) - c2 + rank;
  return v;
}

Rational mukai_pairing(const IntersectionRing& ring, const FiberMukaiVector& v,
                       const FiberMukaiVector& w) {
  return fiber_pairing(ring, v.c1, w.c1) - v.rank * w.s - w.rank * v.s;
}

Rational moduli_dimension(const IntersectionRing& ring,
                          const FiberMukaiVector& v) {
  return mukai_pairing(ring, v, v) + Rational(2);
}

Rational slope(const IntersectionRing& ring, const Rational& ch0,
               const DivisorClass& c1, const DivisorClass& omega, int dim) {
  if (ch0.is_zero())
    throw ConstraintError("slope undefined for rank zero");
  Rational degree;
  if (dim == 3) {
    degree = triple_intersection(ring, omega, omega, c1);
  } else if (dim == 2) {
    degree = fiber_pairing(ring, omega, c1);
  } else {
    throw ConstraintError("slope supports dimension 2 or 3");
  }
  return degree / ch0;
}

bool is_slope_semistable(const IntersectionRing& ring,
                         const SheafSlopeData& sub, const SheafSlopeData& whole,
                         const DivisorClass& omega, int dim) {
  return slope(ring, sub.ch0, sub.c1, omega, dim) <=
         slope(ring, whole.ch0, whole.c1, omega, dim);
}

std::string to_string(BpsClass c) {
  switch (c) {
    case BpsClass::kBps:
      return "BPS";
    case BpsClass::kAntiBps:
      return "anti-BPS";
    case BpsClass::kOutside:
      return "outside";
  }
  return "?";
}

namespace {

// effective cone: nonnegative coefficients, not both zero
int cone_sign(const Rational& x, const Rational& y) {
  if (x.is_zero() && y.is_zero()) return 0;
  if (x.sign() >= 0 && y.sign() >= 0) return 1;
  if (x.sign() <= 0 && y.sign() <= 0) return -1;
  return 2;  // mixed
}

}  // namespace

BpsClass bps_classify(const Rational& rank, const DivisorClass& c1,
                      const CurveClass& ch2) {
  auto classify_positive = [&](int flip) {
    Rational r = flip > 0 ? rank : -rank;
    int c1s = cone_sign(flip > 0 ? c1.a : -c1.a, flip > 0 ? c1.b : -c1.b);
    int ch2s = cone_sign(flip > 0 ? ch2.c : -ch2.c, flip > 0 ? ch2.d : -ch2.d);
    if (r.sign() > 0) return true;
    if (!r.is_zero()) return false;
    if (c1s == 1) return true;
    if (c1s != 0) return false;
    return ch2s == 1;
  };
  if (classify_positive(+1)) return BpsClass::kBps;
  if (classify_positive(-1)) return BpsClass::kAntiBps;
  return BpsClass::kOutside;
}

bool dirac_check(const Rational& e, const Rational& g) {
  return (e * g).is_integer();
}

bool cy_fibration_check(long long k_sigma, long long c1_normal) {
  return k_sigma == c1_normal;
}

}  // namespace branecalc
